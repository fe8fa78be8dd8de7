"""States of a resolution and the semisimple model of its edge algebra.

A state assigns a root-of-unity label to every thin edge; it is admissible
when each thick edge sees two equal unordered pairs of distinct labels.
The algebra generated by the edge variables modulo the deformed potential
relations is semisimple with one-dimensional summands indexed by admissible
states, so we realize it directly as the algebra of functions on the
admissible-state set.  In that model the edge generator X_e acts as the
function phi -> beta*zeta^{phi(e)} and the projector attached to any raw
state evaluates to an indicator function (or to zero when the state is not
admissible) -- properties that ``verify_projector_identities`` checks by
honest field arithmetic rather than assuming.

States are label tuples aligned with ``resolution.thin_edges`` (which is
sorted), and all enumerations are in lexicographic order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .cyclotomic import CycloField, CycloNumber
from .errors import SizeBoundError
from .resolution import Resolution

__all__ = [
    "StateAlgebra",
    "StateFunction",
    "ProjectorReport",
    "enumerate_admissible",
    "generator_action",
    "idempotent",
    "verify_projector_identities",
    "DEFAULT_MAX_RAW_STATES",
]

State = tuple  # labels indexed by position in resolution.thin_edges

# admits 12 thin edges at n=2 (4096) and 8 at n=3 (6561), one more of neither
DEFAULT_MAX_RAW_STATES = 6561


def enumerate_admissible(r: Resolution, n: int) -> tuple[State, ...]:
    """All admissible states, lexicographically ordered.

    Enumeration backtracks over thin edges in sorted order, propagating the
    two local pairings allowed at each thick edge, so the work is
    proportional to the admissible set rather than to n^(#thin).
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    thin = r.thin_edges
    pos = {t: i for i, t in enumerate(thin)}
    constraints = [tuple(pos[s] for s in t.slots) for t in r.thick_edges]
    incident: list[list[int]] = [[] for _ in thin]
    for ci, slots in enumerate(constraints):
        for p in set(slots):
            incident[p].append(ci)

    values: list = [None] * len(thin)
    out: list[State] = []

    def feasible(ci: int) -> bool:
        p1, p2, p3, p4 = constraints[ci]
        l1, l2, l3, l4 = values[p1], values[p2], values[p3], values[p4]
        if l1 is not None and l2 is not None:
            if l1 == l2:
                return False
            if l3 is not None and l3 not in (l1, l2):
                return False
            if l4 is not None and l4 not in (l1, l2):
                return False
        if l3 is not None and l4 is not None:
            if l3 == l4:
                return False
            if l1 is not None and l1 not in (l3, l4):
                return False
            if l2 is not None and l2 not in (l3, l4):
                return False
        return True

    def dfs(i: int):
        if i == len(thin):
            out.append(tuple(values))
            return
        for v in range(n):
            values[i] = v
            if all(feasible(ci) for ci in incident[i]):
                dfs(i + 1)
        values[i] = None

    dfs(0)
    return tuple(out)


def iter_raw_states(r: Resolution, n: int, max_raw_states: int = DEFAULT_MAX_RAW_STATES):
    """All n^(#thin) states, lexicographically; gated by a size bound."""
    count = n ** len(r.thin_edges)
    if count > max_raw_states:
        raise SizeBoundError(
            f"raw-state enumeration of size {count} exceeds bound {max_raw_states}"
        )
    return product(range(n), repeat=len(r.thin_edges))


class StateAlgebra:
    """Functions on the admissible states of one resolution, over Q(zeta_n)."""

    def __init__(self, resolution: Resolution, n: int, beta=Fraction(1)):
        beta = Fraction(beta)
        if beta == 0:
            raise ValueError("beta must be nonzero")
        self.resolution = resolution
        self.n = n
        self.beta = beta
        self.field = CycloField(n)
        self.states = enumerate_admissible(resolution, n)
        self.index = {s: i for i, s in enumerate(self.states)}
        self.position = {t: i for i, t in enumerate(resolution.thin_edges)}
        self._factors: list[CycloNumber] | None = None

    # -- basic elements ----------------------------------------------------

    def constant(self, value) -> "StateFunction":
        v = self.field.from_rational(value)
        return StateFunction(self, tuple(v for _ in self.states))

    @property
    def one(self) -> "StateFunction":
        return self.constant(1)

    @property
    def zero(self) -> "StateFunction":
        return self.constant(0)

    def generator_action(self, e: int) -> "StateFunction":
        """The edge generator X_e: the function phi -> beta * zeta^{phi(e)}."""
        if e not in self.position:
            raise KeyError(f"unknown thin edge {e}")
        p = self.position[e]
        vals = tuple(self.field.root(s[p]) * self.beta for s in self.states)
        return StateFunction(self, vals)

    # -- projectors ----------------------------------------------------------

    def _edge_factors(self) -> list[CycloNumber]:
        """(1/n) sum_j (beta*zeta^a)^j / (beta*zeta^b)^j, by m = a-b mod n."""
        if self._factors is None:
            n, fld = self.n, self.field
            factors = []
            for m in range(n):
                ratio = (fld.root(m) * self.beta) / (fld.root(0) * self.beta)
                acc, p = fld.zero, fld.one
                for _ in range(n):
                    acc = acc + p
                    p = p * ratio
                factors.append(acc * Fraction(1, n))
            self._factors = factors
        return self._factors

    def idempotent(self, phi: State) -> "StateFunction":
        """Q_phi = prod_e (1/n)(1 + X_e/(beta*phi(e)) + ... ), in the model.

        For admissible phi this is the indicator function of phi; for
        non-admissible phi it is the zero function.  Both facts come out of
        the evaluation rather than being special-cased.
        """
        if len(phi) != len(self.resolution.thin_edges):
            raise ValueError("state length does not match thin-edge count")
        factors = self._edge_factors()
        n = self.n
        zero, one = self.field.zero, self.field.one
        vals = []
        for psi in self.states:
            acc = one
            for a, b in zip(psi, phi):
                f = factors[(a - b) % n]
                if f.is_zero:
                    acc = zero  # an exact zero factor kills the product
                    break
                acc = acc * f
            vals.append(acc)
        return StateFunction(self, tuple(vals))


class StateFunction:
    """A map from admissible states to Q(zeta_n), with pointwise operations."""

    __slots__ = ("algebra", "values")

    def __init__(self, algebra: StateAlgebra, values: tuple):
        self.algebra = algebra
        self.values = values

    def _coerce(self, other):
        if isinstance(other, StateFunction):
            if other.algebra is not self.algebra:
                raise ValueError("state functions over different algebras")
            return other
        if isinstance(other, (int, Fraction, CycloNumber)):
            v = other if isinstance(other, CycloNumber) else (
                self.algebra.field.from_rational(other)
            )
            return StateFunction(self.algebra, tuple(v for _ in self.values))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return StateFunction(
            self.algebra, tuple(a + b for a, b in zip(self.values, o.values))
        )

    __radd__ = __add__

    def __neg__(self):
        return StateFunction(self.algebra, tuple(-a for a in self.values))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return StateFunction(
            self.algebra, tuple(a * b for a, b in zip(self.values, o.values))
        )

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = self.algebra.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.values == o.values

    def __hash__(self):
        return hash(self.values)

    @property
    def is_zero(self) -> bool:
        return all(v.is_zero for v in self.values)

    def __call__(self, state: State):
        return self.values[self.algebra.index[state]]

    def support(self) -> tuple[State, ...]:
        return tuple(
            s for s, v in zip(self.algebra.states, self.values) if not v.is_zero
        )

    def __repr__(self):
        shown = ", ".join(
            f"{s}: {v}" for s, v in zip(self.algebra.states, self.values)
        )
        return f"StateFunction({{{shown}}})"


# ----------------------------------------------------------------------
# Free-function wrappers
# ----------------------------------------------------------------------

def generator_action(e: int, r: Resolution, n: int, beta=Fraction(1)) -> StateFunction:
    return StateAlgebra(r, n, beta).generator_action(e)


def idempotent(phi: State, r: Resolution, n: int, beta=Fraction(1)) -> StateFunction:
    return StateAlgebra(r, n, beta).idempotent(phi)


@dataclass
class ProjectorReport:
    n: int
    beta: Fraction
    raw_count: int = 0
    admissible_count: int = 0
    vanishing_count: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def verify_projector_identities(
    r: Resolution,
    n: int,
    beta=Fraction(1),
    max_raw_states: int = DEFAULT_MAX_RAW_STATES,
) -> ProjectorReport:
    """Check idempotency, orthogonality, completeness and vanishing exactly.

    Runs over the full raw-state set S', so it is gated by
    ``max_raw_states``.  Orthogonality is checked through supports: the
    pointwise product of two projectors vanishes iff no admissible state is
    in both supports.
    """
    algebra = StateAlgebra(r, n, beta)
    report = ProjectorReport(n=n, beta=Fraction(beta))
    running = algebra.zero
    owners: dict[State, State] = {}
    for phi in iter_raw_states(r, n, max_raw_states):
        report.raw_count += 1
        q = algebra.idempotent(phi)
        if not (q * q == q):
            report.failures.append(f"Q^2 != Q for state {phi}")
        admissible = phi in algebra.index
        if admissible:
            report.admissible_count += 1
            if not q(phi) == algebra.field.one:
                report.failures.append(f"Q(phi) != 1 for admissible state {phi}")
        elif q.is_zero:
            report.vanishing_count += 1
        else:
            report.failures.append(f"Q != 0 for non-admissible state {phi}")
        for psi in q.support():
            if psi in owners and owners[psi] != phi:
                report.failures.append(
                    f"orthogonality broken: {owners[psi]} and {phi} overlap at {psi}"
                )
            owners[psi] = phi
        running = running + q
    if not (running == algebra.one):
        report.failures.append("completeness failed: sum of projectors != 1")
    report.failures.sort()
    return report
