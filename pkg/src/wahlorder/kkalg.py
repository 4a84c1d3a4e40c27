"""The r-dimensional algebras R_{r,a} and their combinatorial companions.

R_{r,a} has basis w_0..w_{r-1} with w_0 the unit and

    w_j * w_i = w_{j+i}   if m(j) > [i],   else 0,

where m is the gap function of resarith.  The same rule has two independent
combinatorial readings used as oracles: an axis-aligned rectangle in the
lattice must avoid orange points except at the origin, and equivalently the
smallest rectangle of Young-diagram boxes spanned by the factors must lie
inside the diagram.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .resarith import SingularityParams, bracket, m_of


class AlgebraTable:
    """Structure constants of a unital algebra on basis w_0..w_{dim-1}.

    products maps (j, i) to {k: coeff}; coefficients are ints or Poly,
    uniformly per table.  Zero products are simply absent.
    """

    def __init__(self, dim: int, products=None):
        self.dim = dim
        self.products = {}
        if products:
            for (j, i), cell in products.items():
                cell = {k: c for k, c in cell.items() if c}
                if cell:
                    self.products[(j, i)] = cell

    def product(self, j: int, i: int) -> dict:
        return self.products.get((j, i), {})

    def set_product(self, j: int, i: int, cell: dict):
        cell = {k: c for k, c in cell.items() if c}
        if cell:
            self.products[(j, i)] = cell
        else:
            self.products.pop((j, i), None)

    def is_unital(self) -> bool:
        for x in range(self.dim):
            if self.product(0, x) != {x: _one_like(self)} or \
               self.product(x, 0) != {x: _one_like(self)}:
                return False
        return True

    def associator_violation(self):
        """First triple (k, j, i) with (w_k w_j) w_i != w_k (w_j w_i), or None."""
        d = self.dim
        for k in range(d):
            for j in range(d):
                kj = self.product(k, j)
                for i in range(d):
                    left = {}
                    for m, c in kj.items():
                        for l, c2 in self.product(m, i).items():
                            _acc(left, l, c * c2)
                    right = {}
                    for m, c in self.product(j, i).items():
                        for l, c2 in self.product(k, m).items():
                            _acc(right, l, c * c2)
                    if _clean(left) != _clean(right):
                        return (k, j, i)
        return None

    def opposite(self) -> 'AlgebraTable':
        return AlgebraTable(self.dim,
                            {(i, j): cell for (j, i), cell in self.products.items()})

    def relabel(self, sigma) -> 'AlgebraTable':
        """Push forward along w_k -> w_{sigma(k)} (sigma a bijection list)."""
        out = {}
        for (j, i), cell in self.products.items():
            out[(sigma[j], sigma[i])] = {sigma[k]: c for k, c in cell.items()}
        return AlgebraTable(self.dim, out)

    def rescale(self, signs) -> 'AlgebraTable':
        """Diagonal basis change w_k -> signs[k] * w_k with signs in {+1,-1}."""
        out = {}
        for (j, i), cell in self.products.items():
            s = signs[j] * signs[i]
            out[(j, i)] = {k: c * (s * signs[k]) for k, c in cell.items()}
        return AlgebraTable(self.dim, out)

    def __eq__(self, other):
        return (isinstance(other, AlgebraTable) and self.dim == other.dim
                and self.products == other.products)

    def nontrivial_products(self):
        """Products with both factors non-unit, sorted."""
        return sorted(((j, i), cell) for (j, i), cell in self.products.items()
                      if j != 0 and i != 0)


def _one_like(table: AlgebraTable):
    for cell in table.products.values():
        for c in cell.values():
            if not isinstance(c, int):
                return type(c).const(1)
    return 1


def _acc(d, k, c):
    c2 = d.get(k)
    d[k] = c if c2 is None else c2 + c


def _clean(d):
    return {k: c for k, c in d.items() if c}


# ---------------------------------------------------------------------------
# products
# ---------------------------------------------------------------------------

def kk_product_closed(params: SingularityParams, j: int, i: int):
    """w_j * w_i by the gap-function rule; returns the output index or None."""
    r = params.r
    j, i = bracket(j, r), bracket(i, r)
    return (j + i) % r if m_of(j, params) > i else None


def kk_product_rect(params: SingularityParams, j: int, i: int):
    """w_j * w_i by the rectangle oracle: the closed box [0,[-aj]] x [0,[i]]
    must contain no orange point except the origin."""
    r, b = params.r, params.b
    j, i = bracket(j, r), bracket(i, r)
    X = bracket(-params.a * j, r)
    Y = i
    for u in range(0, X + 1):
        v = bracket(b * u, r)  # lowest orange height >= 0 in column u
        if v <= Y and (u, v) != (0, 0):
            return None
    return (j + i) % r


def kk_table(params: SingularityParams) -> AlgebraTable:
    r = params.r
    products = {}
    for j in range(r):
        for i in range(r):
            k = kk_product_closed(params, j, i)
            if k is not None:
                products[(j, i)] = {k: 1}
    return AlgebraTable(r, products)


def opposite(table: AlgebraTable) -> AlgebraTable:
    return table.opposite()


def poly_table(table: AlgebraTable) -> AlgebraTable:
    """The same table with integer coefficients promoted to Poly constants."""
    from .polyring import Poly
    return AlgebraTable(table.dim, {
        key: {k: (Poly.const(c) if isinstance(c, int) else c)
              for k, c in cell.items()}
        for key, cell in table.products.items()})


def dual_relabel(params: SingularityParams) -> list:
    """sigma with sigma(k) = [-b k]; R_{r,a} = relabel(opposite(R_{r,b}), sigma).

    Plain opposite alone does not identify R_{r,a} with R_{r,b}: the mirror
    swapping the two lattices reflects across the diagonal, which twists box
    labels by k -> [-a k].  (Counterexample to the untwisted statement:
    R_{9,5} has w_1^2 = w_2 while R_{9,2} has w_1^2 = 0.)
    """
    r, b = params.r, params.b
    return [bracket(-b * k, r) for k in range(r)]


# ---------------------------------------------------------------------------
# combinatorial companions
# ---------------------------------------------------------------------------

@dataclass
class YoungDiagram:
    """Maximal Young diagram with no orange point strictly inside.

    Box (x, y) (unit cell with SW corner (x, y)) is present iff no orange
    point (u, v) has 1 <= u <= x and 1 <= v <= y; the domain is clipped to
    [0, r-1]^2, where the labels gamma(x, y) exhaust Z_r.  Figures sometimes
    trim boxes whose closed boundary touches an orange point; that stricter
    rule disagrees with the product rule (e.g. it would erase the box
    certifying w_4^2 = w_8 at (r, a) = (9, 2)), so the interior rule is
    normative here.
    """

    params: SingularityParams
    column_heights: list = field(default_factory=list)

    def __post_init__(self):
        if not self.column_heights:
            r, b = self.params.r, self.params.b
            heights = [r]
            cur = r
            for u in range(1, r):
                cur = min(cur, bracket(b * u, r))
                heights.append(min(cur, r))
            self.column_heights = heights

    def contains(self, x: int, y: int) -> bool:
        r = self.params.r
        if not (0 <= x < r and 0 <= y < r):
            return False
        return y < self.column_heights[x]

    def label(self, x: int, y: int) -> int:
        from .resarith import gamma
        return gamma((x, y), self.params)

    def boxes(self):
        for x in range(self.params.r):
            for y in range(self.column_heights[x]):
                yield (x, y, self.label(x, y))

    def product(self, j: int, i: int):
        """Product rule: the box rectangle spanned by the factors must lie
        inside the diagram.  Must agree with kk_product_closed."""
        r = self.params.r
        j, i = bracket(j, r), bracket(i, r)
        if j == 0 or i == 0:
            return (j + i) % r
        c = bracket(-self.params.a * j, r)  # bottom-row box labeled j
        h = i                               # left-column box labeled i
        return (j + i) % r if self.contains(c, h) else None


def young_diagram(params: SingularityParams) -> YoungDiagram:
    return YoungDiagram(params)


def gauss_word(params: SingularityParams) -> list:
    """Self-intersection labels along the curve, each appearing twice:
    r-1, r-2, ..., 1, [-b], [-2b], ..., [-(r-1)b]."""
    r, b = params.r, params.b
    return list(range(r - 1, 0, -1)) + [bracket(-k * b, r) for k in range(1, r)]


def self_intersection_count(params: SingularityParams) -> int:
    return params.r - 1
