"""McKay correspondence for finite subgroups of SU(2).

Character tables over exact cyclotomic numbers for the cyclic groups, the
binary dihedral groups, and the three exceptional binary polyhedral groups
(the last audited against column orthogonality on load).  The McKay graph
has a_ij = dim Hom(rho_i, Q (x) rho_j) computed from characters; removing
the trivial vertex gives the resolution graph of the rational double point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .scalars import CycNum, scalar_is_zero


@dataclass(frozen=True)
class GroupSpec:
    """ADE label: A_n is cyclic of order n+1, D_n binary dihedral of order
    4(n-2), E6/E7/E8 the binary tetrahedral/octahedral/icosahedral groups."""

    series: str
    n: int

    def __post_init__(self):
        if self.series == "A":
            # n = 0 is the trivial group, kept for cyclic-family sweeps
            if self.n < 0:
                raise ValueError("A_n needs n >= 0")
        elif self.series == "D":
            if self.n < 4:
                raise ValueError("D_n needs n >= 4")
        elif self.series == "E":
            if self.n not in (6, 7, 8):
                raise ValueError("E_n needs n in {6, 7, 8}")
        else:
            raise ValueError(f"unknown series {self.series!r}")

    @property
    def order(self) -> int:
        if self.series == "A":
            return self.n + 1
        if self.series == "D":
            return 4 * (self.n - 2)
        return {6: 24, 7: 48, 8: 120}[self.n]

    @property
    def label(self) -> str:
        return f"{self.series}{self.n}"

    @classmethod
    def parse(cls, text: str) -> "GroupSpec":
        text = text.strip().upper()
        if not text or text[0] not in "ADE" or not text[1:].isdigit():
            raise ValueError(f"cannot parse group label {text!r}")
        return cls(text[0], int(text[1:]))


@dataclass(frozen=True)
class CharacterTable:
    """Rows are irreducible characters, columns conjugacy classes.

    values[i][c] is chi_i on class c; chi_0 is trivial and q_index points at
    the character of the defining 2-dimensional representation Q."""

    group: GroupSpec
    class_sizes: tuple
    class_orders: tuple
    values: tuple  # rows of CycNum/Fraction entries
    q_index: int

    @property
    def num_classes(self) -> int:
        return len(self.class_sizes)

    def dims(self):
        out = []
        for row in self.values:
            d = row[0]
            if isinstance(d, CycNum):
                d = d.as_rational()
            out.append(Fraction(d))
        return tuple(out)

    def validate(self):
        """Column orthogonality and the basic sanity identities."""
        g = self.group.order
        if sum(self.class_sizes) != g:
            raise ValueError("class sizes do not sum to the group order")
        if sum(int(d) * int(d) for d in self.dims()) != g:
            raise ValueError("squared dimensions do not sum to the group order")
        k = self.num_classes
        for c1 in range(k):
            for c2 in range(k):
                total = Fraction(0)
                for row in self.values:
                    total = total + row[c1] * _conj(row[c2])
                want = Fraction(g, self.class_sizes[c1]) if c1 == c2 else Fraction(0)
                if not total == want:
                    raise ValueError(f"column orthogonality fails at ({c1},{c2})")
        if self.q_index >= 0 and not self.values[self.q_index][0] == 2:
            raise ValueError("Q must be 2-dimensional")


def _conj(x):
    return x.conj() if isinstance(x, CycNum) else x


def cyclic_table(m: int) -> CharacterTable:
    """Z_m embedded in SU(2) as diag(zeta, zeta^-1); characters chi_j(g^k) =
    zeta^(jk).  Q = chi_1 + chi_(m-1), recorded by its character row."""
    spec = GroupSpec("A", m - 1)
    if m == 1:
        # trivial group: one class; Q restricts to twice the trivial rep
        return CharacterTable(
            group=spec, class_sizes=(1,), class_orders=(1,),
            values=((Fraction(1),),), q_index=-1)
    values = []
    for j in range(m):
        row = tuple(CycNum.zeta(m, (j * k) % m) if m > 1 else Fraction(1)
                    for k in range(m))
        values.append(row)
    return CharacterTable(
        group=spec,
        class_sizes=(1,) * m,
        class_orders=tuple(m // _gcd(m, k) if k else 1 for k in range(m)),
        values=tuple(values),
        q_index=-1)  # Q is reducible for cyclic groups: chi_1 + chi_(m-1)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def cyclic_q_character(m: int):
    """Character of Q for Z_m: zeta^k + zeta^-k per class."""
    if m == 1:
        return (Fraction(2),)
    return tuple(CycNum.zeta(m, k % m) + CycNum.zeta(m, (-k) % m) for k in range(m))


def binary_dihedral_table(n: int) -> CharacterTable:
    """The binary dihedral group of order 4(n-2): generators a (order
    2(n-2)) and x with x^2 = a^(n-2).  McKay graph is the extended D_n."""
    spec = GroupSpec("D", n)
    m = n - 2  # a has order 2m
    z = lambda k: CycNum.zeta(2 * m, k % (2 * m))
    # classes: 1, a^m, {a^k, a^-k} for k=1..m-1, x-coset evens, x-coset odds
    class_sizes = (1, 1) + (2,) * (m - 1) + (m, m)
    class_orders = tuple(
        [1, 2] + [2 * m // _gcd(2 * m, k) for k in range(1, m)] + [4, 4])
    reps = ["e", "z"] + [f"a^{k}" for k in range(1, m)] + ["x", "xa"]

    rows = []
    # four 1-dimensional characters: lambda(a) = eps, lambda(x)^2 = eps^m
    one = Fraction(1)
    for eps_a, eps_x in _bd_linear_characters(m):
        row = [one]
        row.append(_pow(eps_a, m))
        for k in range(1, m):
            row.append(_pow(eps_a, k))
        row.append(eps_x)
        row.append(eps_a * eps_x)
        rows.append(tuple(row))
    # 2-dimensional characters chi_j(a^k) = zeta^(jk) + zeta^(-jk), zero on x
    for j in range(1, m):
        row = [Fraction(2), 2 * _pow(Fraction(-1), j)]
        for k in range(1, m):
            row.append(z(j * k) + z(-j * k))
        row += [Fraction(0), Fraction(0)]
        rows.append(tuple(row))
    table = CharacterTable(group=spec, class_sizes=class_sizes,
                           class_orders=class_orders, values=tuple(rows),
                           q_index=4)
    return table


def _pow(x, k):
    out = Fraction(1)
    for _ in range(k):
        out = out * x
    return out


def _bd_linear_characters(m: int):
    """(lambda(a), lambda(x)) for the four 1-dimensional characters."""
    one, mone = Fraction(1), Fraction(-1)
    if m % 2 == 0:
        return [(one, one), (one, mone), (mone, one), (mone, mone)]
    i = CycNum.zeta(4)
    return [(one, one), (one, mone), (mone, i), (mone, -i)]


def _e_tables():
    """Shipped character tables of the binary tetrahedral, octahedral, and
    icosahedral groups (validated against orthogonality on load)."""
    one, two, three = Fraction(1), Fraction(2), Fraction(3)
    w = CycNum.zeta(3)
    w2 = CycNum.zeta(3, 2)

    # binary tetrahedral, order 24; classes e, z, order-4, c, c^2, zc, zc^2
    t_rows = [
        (one, one, one, one, one, one, one),
        (one, one, one, w, w2, w, w2),
        (one, one, one, w2, w, w2, w),
        (two, -two, Fraction(0), -one, -one, one, one),
        (two, -two, Fraction(0), -w, -w2, w, w2),
        (two, -two, Fraction(0), -w2, -w, w2, w),
        (three, three, -one, Fraction(0), Fraction(0), Fraction(0), Fraction(0)),
    ]
    e6 = CharacterTable(group=GroupSpec("E", 6),
                        class_sizes=(1, 1, 6, 4, 4, 4, 4),
                        class_orders=(1, 2, 4, 3, 3, 6, 6),
                        values=tuple(t_rows), q_index=3)

    # binary octahedral, order 48
    r2 = CycNum.zeta(8) + CycNum.zeta(8, 7)  # sqrt(2)
    z0 = Fraction(0)
    o_rows = [
        (one, one, one, one, one, one, one, one),
        (one, one, -one, -one, one, one, one, -one),
        (two, two, z0, z0, two, -one, -one, z0),
        (two, -two, r2, -r2, z0, one, -one, z0),
        (two, -two, -r2, r2, z0, one, -one, z0),
        (three, three, -one, -one, -one, z0, z0, one),
        (three, three, one, one, -one, z0, z0, -one),
        (Fraction(4), Fraction(-4), z0, z0, z0, -one, one, z0),
    ]
    e7 = CharacterTable(group=GroupSpec("E", 7),
                        class_sizes=(1, 1, 6, 6, 6, 8, 8, 12),
                        class_orders=(1, 2, 8, 8, 4, 6, 3, 4),
                        values=tuple(o_rows), q_index=3)

    # binary icosahedral, order 120; mu, nu are the two Galois images of
    # the golden-ratio trace 2cos(2 pi / 5)
    mu = CycNum.zeta(5) + CycNum.zeta(5, 4)
    nu = CycNum.zeta(5, 2) + CycNum.zeta(5, 3)
    i_rows = [
        (one, one, one, one, one, one, one, one, one),
        (two, -two, z0, -one, one, mu, nu, -mu, -nu),
        (two, -two, z0, -one, one, nu, mu, -nu, -mu),
        (three, three, -one, z0, z0, 1 + mu, 1 + nu, 1 + mu, 1 + nu),
        (three, three, -one, z0, z0, 1 + nu, 1 + mu, 1 + nu, 1 + mu),
        (Fraction(4), Fraction(4), z0, one, one, -one, -one, -one, -one),
        (Fraction(4), Fraction(-4), z0, one, -one, -one, -one, one, one),
        (Fraction(5), Fraction(5), one, -one, -one, z0, z0, z0, z0),
        (Fraction(6), Fraction(-6), z0, z0, z0, one, one, -one, -one),
    ]
    e8 = CharacterTable(group=GroupSpec("E", 8),
                        class_sizes=(1, 1, 30, 20, 20, 12, 12, 12, 12),
                        class_orders=(1, 2, 4, 3, 6, 5, 5, 10, 10),
                        values=tuple(i_rows), q_index=1)
    return {"E6": e6, "E7": e7, "E8": e8}


@lru_cache(maxsize=None)
def character_table(spec: GroupSpec) -> CharacterTable:
    if spec.series == "A":
        table = cyclic_table(spec.n + 1)
    elif spec.series == "D":
        table = binary_dihedral_table(spec.n)
    else:
        table = _e_tables()[spec.label]
    table.validate()
    return table


@dataclass(frozen=True)
class McKayGraph:
    """Vertices are irreducible representations with their dimensions;
    adjacency[i][j] = dim Hom(rho_i, Q (x) rho_j)."""

    dims: tuple
    adjacency: tuple
    trivial_index: int = 0

    def to_json(self):
        return {"vertices": [{"id": i, "dim": int(d)} for i, d in enumerate(self.dims)],
                "edges": [[i, j, int(self.adjacency[i][j])]
                          for i in range(len(self.dims))
                          for j in range(i, len(self.dims))
                          if self.adjacency[i][j]]}


def mckay_graph(spec: GroupSpec) -> McKayGraph:
    table = character_table(spec)
    g = spec.order
    if spec.series == "A":
        chi_q = cyclic_q_character(spec.n + 1)
    else:
        chi_q = table.values[table.q_index]
    k = table.num_classes
    rows = table.values
    r = len(rows)
    weighted = [tuple(table.class_sizes[c] * (chi_q[c] * rows[j][c])
                      for c in range(k)) for j in range(r)]
    conj_rows = [tuple(_conj(v) for v in row) for row in rows]
    # the multiplicity matrix is symmetric (Q is self-dual), so fill i <= j
    entries = [[0] * r for _ in range(r)]
    for i in range(r):
        for j in range(i, r):
            total = Fraction(0)
            for c in range(k):
                total = total + weighted[j][c] * conj_rows[i][c]
            if isinstance(total, CycNum):
                rat = total.as_rational()
                if rat is None:
                    raise ValueError("multiplicity is not rational")
                total = rat
            val = total / g
            if val.denominator != 1 or val < 0:
                raise ValueError("multiplicity must be a nonnegative integer")
            entries[i][j] = entries[j][i] = int(val)
    adjacency = [tuple(line) for line in entries]
    dims = tuple(int(d) for d in table.dims())
    return McKayGraph(dims=dims, adjacency=tuple(adjacency))


def resolution_graph(spec: GroupSpec) -> McKayGraph:
    """The McKay graph minus the trivial representation: the dual graph of
    the exceptional divisors of the minimal resolution."""
    full = mckay_graph(spec)
    keep = [i for i in range(len(full.dims)) if i != full.trivial_index]
    return McKayGraph(
        dims=tuple(full.dims[i] for i in keep),
        adjacency=tuple(tuple(full.adjacency[i][j] for j in keep) for i in keep),
        trivial_index=-1)


def dimension_vector_check(graph: McKayGraph) -> bool:
    """(2 I - A) applied to the dimension vector must vanish."""
    n = len(graph.dims)
    for i in range(n):
        total = 2 * graph.dims[i] - sum(graph.adjacency[i][j] * graph.dims[j]
                                        for j in range(n))
        if total != 0:
            return False
    return True


def dynkin_verdict(graph: McKayGraph) -> str:
    """Classify a McKay graph as an extended Dynkin diagram by its shape."""
    n = len(graph.dims)
    degrees = [sum(graph.adjacency[i][j] for j in range(n) if j != i)
               + 2 * graph.adjacency[i][i] for i in range(n)]
    if n == 1 and graph.adjacency[0][0] == 2:
        return "affine A0 (double self-loop)"
    if n == 2 and graph.adjacency[0][1] == 2:
        return "affine A1 (double edge)"
    if all(d == 2 for d in degrees):
        return f"affine A{n - 1} (cycle)"
    branch = [i for i in range(n) if degrees[i] >= 3]
    if len(branch) == 2 and all(degrees[i] == 3 for i in branch):
        return f"affine D{n - 1}"
    if len(branch) == 1:
        b = branch[0]
        if degrees[b] == 4:
            return "affine D4"
        arms = sorted(_arm_lengths(graph, b))
        if arms == [2, 2, 2]:
            return "affine E6"
        if arms == [1, 3, 3]:
            return "affine E7"
        if arms == [1, 2, 5]:
            return "affine E8"
    return "unrecognized"


def _arm_lengths(graph: McKayGraph, center: int):
    n = len(graph.dims)
    arms = []
    for start in range(n):
        if start == center or not graph.adjacency[center][start]:
            continue
        length = 1
        prev, cur = center, start
        while True:
            nxt = [j for j in range(n)
                   if j != prev and graph.adjacency[cur][j]]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    return arms


ADE_EQUATIONS = {
    "A": lambda n: f"x*y - z^{n + 1}",
    "D": lambda n: f"x^2 + y^2*z + z^{n - 1}",
    "E": lambda n: {6: "x^2 + y^3 + z^4",
                    7: "x^2 + y^3 + y*z^3",
                    8: "x^2 + y^3 + z^5"}[n],
}


def ade_equation(spec: GroupSpec) -> str:
    """The defining equation of the corresponding rational double point."""
    return ADE_EQUATIONS[spec.series](spec.n)
