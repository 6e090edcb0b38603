"""Scenario configuration files.

The format is line oriented.  Each non-blank line that does not start with
``#`` reads ``section.key = value``; lists are comma separated.  Unknown keys,
duplicate keys and keys that do not belong to the chosen defect variant are
errors.  Example::

    defect.variant = Dispiration
    defect.alpha = 0.5
    defect.beta = 0.3
    field.omega = 1.0
    field.charge_sign = 1
    quantum.n_max = 4
    quantum.l_min = -2
    quantum.l_max = 2
    quantum.k = 0, 1
    oracle.N = 2048
    output.format = csv

Keys
----
defect.variant
    One of Disclination, DisclinationDisk, ScrewDislocation, Dispiration,
    KKDispiration.
defect.alpha, defect.q, defect.R, defect.beta, defect.phi
    Geometric parameters; which are required depends on the variant.
field.omega, field.charge_sign, field.B0
    ``omega`` is required except for KKDispiration, which requires ``B0``
    instead.  ``charge_sign`` defaults to -1 (electron).
quantum.n_max, quantum.l_min, quantum.l_max, quantum.k, quantum.Q
    ``Q`` is required for, and only allowed with, KKDispiration.
oracle.N, oracle.rho_max, oracle.tol, oracle.richardson
    Defaults 2048, ``auto``, 1e-6, true.
output.format, output.path
    Defaults ``csv`` and ``-`` (standard output).
sweep.parameter, sweep.values
    Optional; parameter grid for the ``sweep`` command.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from .errors import ConfigError, DomainError
from .geometry import VARIANTS, KKDispiration
from .spectra import FieldConfig

VARIANT_FIELDS = {
    "Disclination": ("alpha",),
    "DisclinationDisk": ("q", "R"),
    "ScrewDislocation": ("beta", "phi"),
    "Dispiration": ("alpha", "beta"),
    "KKDispiration": ("alpha", "beta"),
}

KEYS = {
    "defect": ("variant", "alpha", "q", "R", "beta", "phi"),
    "field": ("omega", "charge_sign", "B0"),
    "quantum": ("n_max", "l_min", "l_max", "k", "Q"),
    "oracle": ("N", "rho_max", "tol", "richardson"),
    "output": ("format", "path"),
    "sweep": ("parameter", "values"),
}

FIELD_SWEEPABLE = ("omega", "B0")


@dataclass(frozen=True)
class ScenarioConfig:
    defect: object
    field: FieldConfig
    n_max: int
    l_min: int
    l_max: int
    k: tuple
    Q: tuple = (0.0,)
    oracle_N: int = 2048
    oracle_rho_max: float | None = None
    oracle_tol: float = 1e-6
    oracle_richardson: bool = True
    output_format: str = "csv"
    output_path: str = "-"
    sweep_parameter: str | None = None
    sweep_values: tuple = ()

    @property
    def l_range(self):
        return (self.l_min, self.l_max)

    def with_parameter(self, name, value):
        """Copy with one defect or field parameter replaced (used by sweeps)."""
        if name in FIELD_SWEEPABLE:
            return replace(self, field=replace(self.field, **{name: value}))
        return replace(self, defect=replace(self.defect, **{name: value}))


def _float(text):
    value = float(text)
    if not math.isfinite(value):
        raise ValueError(f"{text!r} is not a finite number")
    return value


def _int(text):
    value = _float(text)
    if not value.is_integer():
        raise ValueError(f"{text!r} is not an integer")
    return int(value)


def _float_list(text):
    items = [t.strip() for t in text.split(",")]
    if not items or any(not t for t in items):
        raise ValueError(f"{text!r} is not a non-empty comma separated list")
    return tuple(_float(t) for t in items)


def _bool(text):
    low = text.strip().lower()
    if low in ("true", "yes", "1"):
        return True
    if low in ("false", "no", "0"):
        return False
    raise ValueError(f"{text!r} is not a boolean")


def parse_config(text):
    """Parse and validate configuration text into a :class:`ScenarioConfig`.

    Raises
    ------
    ConfigError
        Listing every problem found, each with its line number when it can
        be attributed to one.
    """
    errors = []
    raw = {}
    where = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if "=" not in stripped:
            errors.append((lineno, f"expected 'section.key = value', got {stripped!r}"))
            continue
        key, value = (part.strip() for part in stripped.split("=", 1))
        section, dot, name = key.partition(".")
        if not dot or section not in KEYS or name not in KEYS[section]:
            errors.append((lineno, f"unknown key {key!r}"))
            continue
        if key in raw:
            errors.append((lineno, f"duplicate key {key!r} (first on line {where[key]})"))
            continue
        if not value:
            errors.append((lineno, f"empty value for {key!r}"))
            continue
        raw[key] = value
        where[key] = lineno

    def get(key, conv, required=False, default=None):
        if key not in raw:
            if required:
                errors.append((None, f"missing required key {key!r}"))
            return default
        try:
            return conv(raw[key])
        except ValueError as exc:
            errors.append((where[key], f"{key}: {exc}"))
            return default

    variant = raw.get("defect.variant")
    defect = None
    if variant is None:
        errors.append((None, "missing required key 'defect.variant'"))
    elif variant not in VARIANTS:
        errors.append((where["defect.variant"], f"unknown defect variant {variant!r}; expected one of {sorted(VARIANTS)}"))
        variant = None
    if variant is not None:
        allowed = VARIANT_FIELDS[variant]
        params = {}
        for name in KEYS["defect"][1:]:
            key = f"defect.{name}"
            if name in allowed:
                value = get(key, _float, required=True)
                if value is not None:
                    params[name] = value
            elif key in raw:
                errors.append((where[key], f"{key} is not a parameter of {variant} (allowed: {', '.join(allowed)})"))
        if len(params) == len(allowed):
            try:
                defect = VARIANTS[variant](**params)
            except DomainError as exc:
                line = min(where[f"defect.{p}"] for p in params) if params else None
                errors.append((line, f"invalid {variant}: {exc}"))

    is_kk = variant == "KKDispiration"
    omega = get("field.omega", _float, required=not is_kk, default=1.0)
    B0 = get("field.B0", _float, required=is_kk)
    if not is_kk and "field.B0" in raw:
        errors.append((where["field.B0"], "field.B0 is only used by KKDispiration"))
    charge_sign = get("field.charge_sign", _int, default=-1)
    field = None
    try:
        field = FieldConfig(omega=omega, charge_sign=charge_sign, B0=B0)
    except DomainError as exc:
        errors.append((where.get("field.omega") or where.get("field.charge_sign"), str(exc)))

    n_max = get("quantum.n_max", _int, required=True)
    l_min = get("quantum.l_min", _int, required=True)
    l_max = get("quantum.l_max", _int, required=True)
    k = get("quantum.k", _float_list, required=True)
    Q = get("quantum.Q", _float_list, required=is_kk, default=(0.0,))
    if n_max is not None and n_max < 0:
        errors.append((where["quantum.n_max"], "quantum.n_max must be >= 0"))
    if l_min is not None and l_max is not None and l_max < l_min:
        errors.append((where["quantum.l_max"], f"empty angular range [{l_min}, {l_max}]"))
    if not is_kk and "quantum.Q" in raw:
        errors.append((where["quantum.Q"], "quantum.Q is only used by KKDispiration"))
    if is_kk and Q is not None and B0 is not None:
        for q in Q:
            if not B0 * q > 0:
                errors.append((where["quantum.Q"], f"B0*Q = {B0 * q!r} must be positive for bound states"))

    N = get("oracle.N", _int, default=2048)
    if N is not None and N < 64:
        errors.append((where["oracle.N"], "oracle.N must be at least 64"))
    rho_max = None
    if raw.get("oracle.rho_max", "auto") != "auto":
        rho_max = get("oracle.rho_max", _float)
        if rho_max is not None and rho_max <= 0:
            errors.append((where["oracle.rho_max"], "oracle.rho_max must be positive"))
    tol = get("oracle.tol", _float, default=1e-6)
    if tol is not None and tol <= 0:
        errors.append((where["oracle.tol"], "oracle.tol must be positive"))
    richardson = get("oracle.richardson", _bool, default=True)

    fmt = raw.get("output.format", "csv")
    if fmt not in ("csv", "json"):
        errors.append((where["output.format"], f"output.format must be csv or json, got {fmt!r}"))
    path = raw.get("output.path", "-")

    sweep_parameter = raw.get("sweep.parameter")
    sweep_values = get("sweep.values", _float_list, default=())
    if (sweep_parameter is None) != ("sweep.values" not in raw):
        errors.append((where.get("sweep.parameter") or where.get("sweep.values"), "sweep needs both sweep.parameter and sweep.values"))
    elif sweep_parameter is not None and variant is not None:
        legal = VARIANT_FIELDS[variant] + (("B0",) if is_kk else ("omega",))
        if sweep_parameter not in legal:
            errors.append((where["sweep.parameter"], f"cannot sweep {sweep_parameter!r} for {variant} (allowed: {', '.join(legal)})"))
        elif defect is not None and field is not None:
            base = ScenarioConfig(defect, field, 0, 0, 0, (0.0,))
            for v in sweep_values:
                try:
                    base.with_parameter(sweep_parameter, v)
                except DomainError as exc:
                    errors.append((where["sweep.values"], f"sweep value {v!r}: {exc}"))

    if errors:
        raise ConfigError(errors)
    return ScenarioConfig(
        defect=defect,
        field=field,
        n_max=n_max,
        l_min=l_min,
        l_max=l_max,
        k=k,
        Q=Q if is_kk else (0.0,),
        oracle_N=N,
        oracle_rho_max=rho_max,
        oracle_tol=tol,
        oracle_richardson=richardson,
        output_format=fmt,
        output_path=path,
        sweep_parameter=sweep_parameter,
        sweep_values=sweep_values,
    )


def _list(values):
    return ", ".join(repr(float(v)) for v in values)


def emit_config(config):
    """Render ``config`` as text that :func:`parse_config` reads back to an equal object."""
    d = config.defect
    is_kk = isinstance(d, KKDispiration)
    lines = [f"defect.variant = {d.kind}"]
    for name in VARIANT_FIELDS[d.kind]:
        lines.append(f"defect.{name} = {getattr(d, name)!r}")
    if is_kk:
        lines.append(f"field.B0 = {config.field.B0!r}")
    lines.append(f"field.omega = {config.field.omega!r}")
    lines.append(f"field.charge_sign = {config.field.charge_sign}")
    lines += [
        f"quantum.n_max = {config.n_max}",
        f"quantum.l_min = {config.l_min}",
        f"quantum.l_max = {config.l_max}",
        f"quantum.k = {_list(config.k)}",
    ]
    if is_kk:
        lines.append(f"quantum.Q = {_list(config.Q)}")
    rho_max = "auto" if config.oracle_rho_max is None else repr(config.oracle_rho_max)
    lines += [
        f"oracle.N = {config.oracle_N}",
        f"oracle.rho_max = {rho_max}",
        f"oracle.tol = {config.oracle_tol!r}",
        f"oracle.richardson = {'true' if config.oracle_richardson else 'false'}",
        f"output.format = {config.output_format}",
        f"output.path = {config.output_path}",
    ]
    if config.sweep_parameter is not None:
        lines.append(f"sweep.parameter = {config.sweep_parameter}")
        lines.append(f"sweep.values = {_list(config.sweep_values)}")
    return "\n".join(lines) + "\n"


def load_config(path):
    with open(path, encoding="utf-8") as fh:
        return parse_config(fh.read())
