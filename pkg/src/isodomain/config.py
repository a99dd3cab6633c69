"""Plain ``key = value`` run configuration.

Blank lines and ``#`` comments are ignored. Every key is optional; missing
keys take their defaults. Unknown or repeated keys are rejected with the
offending line number.
"""
from dataclasses import dataclass, field, replace

from .anisotropy import KINDS, NormSpec
from .errors import InvalidArgument
from .fractional.perimeter import FractionalConfig
from .schedule import AnnealSchedule

COMMANDS = ("tile", "frac-optimize", "verify", "plot")


class ConfigError(InvalidArgument):
    def __init__(self, msg, line=None, column=None):
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + msg)
        self.line = line
        self.column = column


@dataclass(frozen=True)
class RunConfig:
    command: str = "tile"
    norm: NormSpec = field(default_factory=NormSpec.euclidean)
    frac: FractionalConfig = field(default_factory=FractionalConfig)
    anneal: AnnealSchedule = field(default_factory=AnnealSchedule)
    bound: int = 3
    grid: int = 16
    window: int = 1
    out_json: str = ""
    out_svg: str = ""
    verbosity: int = 0

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise InvalidArgument(f"run.command must be one of {COMMANDS}, got {self.command!r}")
        if self.bound < 1:
            raise InvalidArgument(f"tile.bound must be >= 1, got {self.bound}")
        if self.grid < 1:
            raise InvalidArgument(f"grid.size must be >= 1, got {self.grid}")
        if self.window < 0:
            raise InvalidArgument(f"grid.window must be >= 0, got {self.window}")
        if not 0 <= self.verbosity <= 3:
            raise InvalidArgument(f"run.verbosity must lie in [0, 3], got {self.verbosity}")


def _float(v):
    return float(v)


def _parse_directions(v):
    out = []
    for part in v.split(";"):
        part = part.strip()
        if not part:
            continue
        nums = [float(t) for t in part.split(",")]
        if len(nums) == 2:
            nums.append(1.0)
        if len(nums) != 3:
            raise ValueError("each direction is 'dx,dy' or 'dx,dy,weight'")
        out.append(tuple(nums))
    return tuple(out)


def _parse_table(v):
    out = []
    for part in v.split(";"):
        part = part.strip()
        if not part:
            continue
        a, b = part.split(":")
        out.append((float(a), float(b)))
    return tuple(out)


def _bool(v):
    t = v.strip().lower()
    if t in ("true", "yes", "1", "on"):
        return True
    if t in ("false", "no", "0", "off"):
        return False
    raise ValueError("expected true or false")


def _t0(v):
    return None if v.strip().lower() == "auto" else float(v)


# key -> (group, field, converter)
KEYS = {
    "run.command": ("run", "command", str),
    "run.verbosity": ("run", "verbosity", int),
    "norm.kind": ("norm", "kind", str),
    "norm.p": ("norm", "p", _float),
    "norm.directions": ("norm", "directions", _parse_directions),
    "norm.table": ("norm", "table", _parse_table),
    "norm.strict": ("norm", "strict", _bool),
    "frac.s": ("frac", "s", _float),
    "frac.truncation": ("frac", "truncation_radius", _float),
    "frac.depth": ("frac", "depth", int),
    "frac.diagonal_mode": ("frac", "diagonal_mode", str),
    "anneal.t0": ("anneal", "t0", _t0),
    "anneal.decay": ("anneal", "decay", _float),
    "anneal.sweeps": ("anneal", "sweeps", int),
    "anneal.seed": ("anneal", "seed", int),
    "anneal.restarts": ("anneal", "restarts", int),
    "tile.bound": ("run", "bound", int),
    "grid.size": ("run", "grid", int),
    "grid.window": ("run", "window", int),
    "output.json": ("run", "out_json", str),
    "output.svg": ("run", "out_svg", str),
}


def _build_norm(vals):
    kind = vals.get("kind", "euclidean")
    if kind not in KINDS:
        raise InvalidArgument(f"norm.kind must be one of {KINDS}, got {kind!r}")
    if kind == "euclidean":
        phi = NormSpec.euclidean()
    elif kind == "pnorm":
        p = vals.get("p", 2.0)
        if not 1.0 < p < float("inf"):
            raise InvalidArgument(f"norm.p must lie in (1, inf), got {p}")
        phi = NormSpec("pnorm", p=p, strict=True)
    elif kind == "crystalline":
        phi = NormSpec.crystalline(vals.get("directions", ()))
    else:
        phi = NormSpec.tabulated([a for a, _ in vals.get("table", ())], [b for _, b in vals.get("table", ())])
    if "strict" in vals:
        phi = replace(phi, strict=vals["strict"])
    return phi


def parse_config(text):
    groups = {"run": {}, "norm": {}, "frac": {}, "anneal": {}}
    where = {}
    seen = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        if "=" not in line:
            col = len(line) - len(line.lstrip()) + 1
            raise ConfigError("expected 'key = value'", lineno, col)
        key, value = line.split("=", 1)
        key = key.strip()
        value = value.strip()
        if key not in KEYS:
            raise ConfigError(f"unknown key {key!r}", lineno, raw.index(key) + 1 if key else 1)
        if key in seen:
            raise ConfigError(f"duplicate key {key!r} (first set on line {seen[key]})", lineno)
        seen[key] = lineno
        group, name, conv = KEYS[key]
        try:
            groups[group][name] = conv(value)
        except ValueError as exc:
            raise ConfigError(f"bad value for {key}: {exc}", lineno, raw.index("=") + 2) from exc
        where[(group, name)] = (key, lineno)
    try:
        norm = _build_norm(groups["norm"])
        frac = FractionalConfig(**groups["frac"])
        anneal = AnnealSchedule(**groups["anneal"])
        return RunConfig(norm=norm, frac=frac, anneal=anneal, **groups["run"])
    except InvalidArgument as exc:
        msg = str(exc)
        for (_, _), (key, lineno) in where.items():
            if msg.startswith(key):
                raise ConfigError(msg, lineno) from exc
        raise ConfigError(msg) from exc


def _r(x):
    return repr(float(x))


def emit_config(rc):
    """Canonical text for a RunConfig; parse_config(emit_config(rc)) == rc."""
    phi = rc.norm
    lines = [f"run.command = {rc.command}", f"run.verbosity = {rc.verbosity}", f"norm.kind = {phi.kind}"]
    if phi.kind == "pnorm":
        lines.append(f"norm.p = {_r(phi.p)}")
    if phi.kind == "crystalline":
        lines.append("norm.directions = " + "; ".join(",".join(_r(x) for x in d) for d in phi.directions))
    if phi.kind == "table":
        lines.append("norm.table = " + "; ".join(f"{_r(a)}:{_r(v)}" for a, v in phi.table))
    lines.append(f"norm.strict = {str(phi.strict).lower()}")
    f = rc.frac
    lines += [
        f"frac.s = {_r(f.s)}",
        f"frac.truncation = {_r(f.truncation_radius)}",
        f"frac.depth = {f.depth}",
        f"frac.diagonal_mode = {f.diagonal_mode}",
    ]
    a = rc.anneal
    lines += [
        f"anneal.t0 = {'auto' if a.t0 is None else _r(a.t0)}",
        f"anneal.decay = {_r(a.decay)}",
        f"anneal.sweeps = {a.sweeps}",
        f"anneal.seed = {a.seed}",
        f"anneal.restarts = {a.restarts}",
        f"tile.bound = {rc.bound}",
        f"grid.size = {rc.grid}",
        f"grid.window = {rc.window}",
    ]
    if rc.out_json:
        lines.append(f"output.json = {rc.out_json}")
    if rc.out_svg:
        lines.append(f"output.svg = {rc.out_svg}")
    return "\n".join(lines) + "\n"


def norm_to_dict(phi):
    out = {"kind": phi.kind, "strict": phi.strict}
    if phi.kind == "pnorm":
        out["p"] = phi.p
    if phi.kind == "crystalline":
        out["directions"] = [list(d) for d in phi.directions]
    if phi.kind == "table":
        out["table"] = [list(t) for t in phi.table]
    return out
