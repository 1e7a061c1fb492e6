"""Multiplicity functions and the context bundling them with a root system."""
import threading
from fractions import Fraction

from ..errors import ExactModeRequired, ParseError, TooManyParameters
from ..roots import dot, norm2
from ..scalar import ZERO, Scalar


class MultiplicitySpec:
    """kappa as one value per reflection class.

    ``mode`` is "symbolic" (values are Scalars in k0/k1), "rational" (exact
    constants) or "float" (for the numeric layer only).
    """

    def __init__(self, values, mode):
        self.values = tuple(values)
        self.mode = mode

    @staticmethod
    def symbolic(rs, params=None, extra=None):
        """Class i -> k_{params[i]}.  With more than two classes, pass ``extra``
        rational values for the classes beyond the two symbols, or tie classes
        through ``params``."""
        nc = rs.num_classes
        if params is None:
            if nc > 2 and not extra:
                raise TooManyParameters(
                    f"{rs.name} has {nc} classes but at most two symbols k0, k1 are available; "
                    "tie classes or give rational values for the extra ones",
                    classes=nc,
                )
            params = list(range(min(nc, 2)))
        vals = []
        extra = list(extra or [])
        for i in range(nc):
            if i < len(params) and params[i] is not None:
                p = params[i]
                if p not in (0, 1):
                    raise TooManyParameters("symbol index must be 0 (k0) or 1 (k1)")
                vals.append(Scalar.param(p))
            else:
                if not extra:
                    raise TooManyParameters(f"no value for class {i}")
                vals.append(Scalar.of(Fraction(extra.pop(0))))
        return MultiplicitySpec(vals, "symbolic")

    @staticmethod
    def rational(rs, values):
        vals = _broadcast(rs, values)
        return MultiplicitySpec([Scalar.of(Fraction(v)) for v in vals], "rational")

    @staticmethod
    def numeric(rs, values):
        vals = _broadcast(rs, values)
        return MultiplicitySpec([float(v) for v in vals], "float")

    @staticmethod
    def parse(rs, text, tie=False):
        """CLI form: 'symbolic', 'tied', a number, or comma-separated numbers."""
        t = str(text).strip().lower()
        if t in ("symbolic", "sym"):
            if tie:
                return MultiplicitySpec.symbolic(rs, params=[0] * rs.num_classes)
            return MultiplicitySpec.symbolic(rs)
        if t in ("tied", "symbolic-tied"):
            return MultiplicitySpec.symbolic(rs, params=[0] * rs.num_classes)
        parts = [s for s in t.split(",") if s]
        try:
            if any(("." in s or "e" in s) and "/" not in s for s in parts):
                floats = [float(s) for s in parts]
                exact = [Fraction(s) for s in parts]
                if all(float(e) == f for e, f in zip(exact, floats)):
                    return MultiplicitySpec.rational(rs, exact)
                return MultiplicitySpec.numeric(rs, floats)
            return MultiplicitySpec.rational(rs, [Fraction(s) for s in parts])
        except ValueError:
            raise ParseError(f"cannot read multiplicity {text!r}") from None

    @property
    def exact(self):
        return self.mode in ("symbolic", "rational")

    def as_floats(self, param_values=None):
        out = []
        for v in self.values:
            if isinstance(v, float):
                out.append(v)
            elif v.is_constant():
                out.append(float(v.constant_value()))
            else:
                out.append(float(v.evaluate(param_values)))
        return out

    def __repr__(self):
        return f"MultiplicitySpec({[str(v) for v in self.values]}, {self.mode})"


def _broadcast(rs, values):
    if isinstance(values, (int, float, Fraction, str)):
        values = [values]
    values = list(values)
    if len(values) == 1:
        values = values * rs.num_classes
    if len(values) != rs.num_classes:
        raise ParseError(f"{rs.name} has {rs.num_classes} classes; got {len(values)} values")
    return values


class DunklContext:
    """A root system together with a multiplicity function and per-context caches."""

    def __init__(self, rs, kappa=None):
        if kappa is None:
            kappa = MultiplicitySpec.symbolic(rs)
        if not isinstance(kappa, MultiplicitySpec):
            kappa = MultiplicitySpec.parse(rs, kappa)
        if len(kappa.values) != rs.num_classes:
            raise ParseError("multiplicity does not match the number of classes")
        self.rs = rs
        self.kappa = kappa
        self.dim = rs.dim
        self.weighted = tuple(
            (v, kappa.values[rs.class_of[v]], norm2(v)) for v in rs.positive
        )
        self._cache = {}
        self._lock = threading.RLock()

    @property
    def exact(self):
        return self.kappa.exact

    def require_exact(self, what="this operation"):
        if not self.kappa.exact:
            raise ExactModeRequired(f"{what} needs symbolic or rational kappa")

    def kappa_of(self, v):
        return self.kappa.values[self.rs.class_index(v)]

    def class_values(self):
        return self.kappa.values

    @property
    def gamma(self):
        """gamma_kappa = sum over R+ of kappa(v)."""
        vals = self.kappa.values
        if self.kappa.mode == "float":
            return sum(vals[self.rs.class_of[v]] for v in self.rs.positive)
        total = ZERO
        for i, cls in enumerate(self.rs.classes):
            total = total + vals[i].scale(len(cls))
        return total

    def cached(self, key, build):
        with self._lock:
            if key in self._cache:
                return self._cache[key]
        val = build()
        with self._lock:
            self._cache.setdefault(key, val)
            return self._cache[key]

    def with_kappa(self, kappa):
        return DunklContext(self.rs, kappa)

    def specialise(self, values):
        """Symbolic context -> rational context at k = values."""
        vals = [Scalar.of(v.evaluate(values)) if not v.is_constant() else v for v in self.kappa.values]
        return DunklContext(self.rs, MultiplicitySpec(vals, "rational"))

    def __repr__(self):
        return f"DunklContext({self.rs.name}, {self.kappa})"


def direction(ctx, a):
    """Accept an index (0-based) or a vector and return a Fraction vector."""
    if isinstance(a, int):
        v = [Fraction(0)] * ctx.dim
        v[a] = Fraction(1)
        return tuple(v)
    if len(a) != ctx.dim:
        from ..errors import DimensionMismatch

        raise DimensionMismatch(f"direction has {len(a)} entries, expected {ctx.dim}")
    return tuple(Fraction(x) for x in a)


def inner(a, b):
    return dot(a, b)
