"""
Named strings over the stars W_{n,mbar} and the Koszul algebras.

Arrow a{j} is the centre arrow from edge j to edge j+1 (indices mod n+1) and
d{j} the loop at the outer end of edge j. Every builder validates its word.
"""

import logging

from brauer.errors import IndexOutOfFamily
from brauer.presentation import star_parameters
from brauer.strmod import Letter, concat, make_word

logger = logging.getLogger(__name__)


class StarStrings:
    """String families of W_{n,mbar}; i = len(mbar) - 1"""

    def __init__(self, presentation):
        self.presentation = presentation
        self.n, self.mbar, self.i = star_parameters(presentation)

    # -- helpers ---------------------------------------------------------------

    def _check(self, name, value, low, high):
        if not low <= value <= high:
            raise IndexOutOfFamily(f"{name}={value} outside {low}..{high} for W_{self.n},{self.mbar}")

    def _word(self, letters, vertex):
        return make_word(self.presentation, letters, str(vertex % (self.n + 1)))

    def _alpha(self, j):
        return Letter(f"a{j % (self.n + 1)}")

    def _delta_inv(self, j, power=1):
        return [Letter(f"d{j}", True)] * power

    def cat(self, *parts):
        return concat(self.presentation, *parts)

    # -- basic strings -----------------------------------------------------------

    def x(self, l, p):
        """α_l α_{l+1} ... α_{p-1}, indices mod n+1; x(l, l) is trivial at l"""
        self._check("l", l, 0, self.n)
        self._check("p", p, 0, self.n)
        count = (p - l) % (self.n + 1)
        return self._word([self._alpha(l + k) for k in range(count)], l)

    def A(self, l):
        """One full turn α_l ... α_{l+n} around the centre"""
        self._check("l", l, 0, self.n)
        return self._word([self._alpha(l + k) for k in range(self.n + 1)], l)

    def mu(self, l, r=None):
        """A_l x_{l,r}; mu(l) = mu(l, l-1)"""
        self._check("l", l, 0, self.n)
        if r is None:
            r = (l - 1) % (self.n + 1)
        return self.cat(self.A(l), self.x(l, r))

    def y(self, l):
        """Π_{j=l}^{i-1} δ_j^{-(m_{j+1}-1)} α_j"""
        self._check("l", l, 0, min(self.i, self.n))
        letters = []
        for j in range(l, self.i):
            letters += self._delta_inv(j, self.mbar[j + 1] - 1) + [self._alpha(j)]
        return self._word(letters, l)

    def z(self, j):
        """Diagonal string when every outer vertex has multiplicity at least 2"""
        if self.i != self.n + 1:
            raise IndexOutOfFamily(f"z strings need i = n+1, got i={self.i}")
        self._check("j", j, 0, self.n)
        letters = []
        for k in range(j, self.n):
            letters += self._delta_inv(k, self.mbar[k + 1] - 1) + [self._alpha(k)]
        letters += self._delta_inv(self.n, self.mbar[self.n + 1] - 1)
        return self._word(letters, j)

    def gamma(self, a, b):
        """Π_{k=a}^{b} δ_k^{-1} α_k, trivial at a when a > b"""
        if a > b:
            return self._word([], a)
        self._check("a", a, 0, self.i - 1)
        self._check("b", b, 0, self.i - 1)
        letters = []
        for k in range(a, b + 1):
            letters += self._delta_inv(k) + [self._alpha(k)]
        return self._word(letters, a)

    def delta_mu(self, l, r=None):
        self._check("l", l, 0, self.i - 1)
        return self.cat(self._word(self._delta_inv(l), l), self.mu(l, r))

    def rho(self, l, r=None):
        """(δ_l^-1 μ_l) ... (δ_1^-1 μ_1)(δ_0^-1 μ_{0,r}); rho(l) = rho(l, l)"""
        self._check("l", l, 0, self.i - 1)
        if r is None:
            r = l
        parts = [self.delta_mu(k) for k in range(l, 0, -1)]
        parts.append(self.delta_mu(0, r))
        return self.cat(*parts)

    # -- tube diagonals ------------------------------------------------------------

    def tube_diagonal(self, d):
        """Module at distance d on the diagonal through S(n) (or through z_n)"""
        self._check("d", d, 0, self.n)
        if self.i == self.n + 1:
            return self.z(self.n - d)
        k = self.n - d
        if k >= self.i:
            return self.x(k, self.n)
        return self.cat(self.y(k), self.x(self.i, self.n))

    def beyond_diagonal(self, p):
        """The strings N_p past the end of the diagonal; stable End is larger there"""
        if p < 0:
            raise IndexOutOfFamily(f"p={p} must be non-negative")
        q, r = divmod(p, self.n + 1)
        if self.i == self.n + 1:
            block = self.cat(self._word([self._alpha(self.n)], self.n), self.z(0))
            return self.cat(self.z(self.n - r), *[block] * (q + 1))
        block = self.cat(self._word([self._alpha(self.n)], self.n), self.y(0), self.x(self.i, self.n))
        rho = self.cat(*[block] * (q + 1))
        if r == 0:
            return rho
        if r <= self.n - self.i:
            return self.cat(self.x(self.n - r, self.n), rho)
        return self.cat(self.y(self.n - r), self.x(self.i, self.n), rho)

    # -- components of non-periodic simples ------------------------------------------

    def simple_diagonal(self, t, j):
        """
        Position j on the diagonal through Ω^-1(S(t)) when m_{t+1} = 2.

        Positions 0..n carry stable End equal to the field.
        """
        n, i = self.n, self.i
        self._check("t", t, 0, i - 1)
        if j < 0:
            raise IndexOutOfFamily(f"j={j} must be non-negative")
        if i == n + 1 or j < t:
            if j > t:
                raise IndexOutOfFamily(f"j={j} exceeds t={t} for i = n+1")
            return self.cat(*[self.delta_mu(k) for k in range(t, t - j - 1, -1)])
        q, r = divmod(j - t, n + 1)
        if r <= n - i + 1:
            if q == 0:
                return self.rho(t, n - r)
            middle = [self.rho(i - 1)] * (q - 1)
            return self.cat(self.rho(t, i - 1), *middle, self.rho(i - 1, n - r))
        tail = [self.delta_mu(k) for k in range(i - 1, n - r, -1)]
        return self.cat(self.rho(t, i - 1), *[self.rho(i - 1)] * q, *tail)

    def simple_syzygy_diagonal(self, t, j):
        """Ω-translates D_j of the diagonal through S(t), 0 <= j <= n"""
        n, i = self.n, self.i
        self._check("t", t, 0, i - 1)
        self._check("j", j, 0, n)
        if j <= t:
            return self.gamma(t - j, t - 1) if j else self._word([], t)
        tail = self.gamma(0, t - 1)
        if j <= n - i + t + 1:
            return self.cat(self.x(n - j + t + 1, 0), tail)
        head = self.cat(self._word(self._delta_inv(i - 1), i - 1), self.x(i - 1, 0))
        if j == n - i + t + 2:
            return self.cat(head, tail)
        return self.cat(self.gamma(n - j + t + 1, i - 2), head, tail)

    def exceptional_diagonal(self, j):
        """Diagonal through M[x_{1,0}] when i = 1 and m_0 = 2, 0 <= j <= n+1"""
        self._check("j", j, 0, self.n + 1)
        if self.i != 1:
            raise IndexOutOfFamily(f"needs i = 1, got i={self.i}")
        if j == 0:
            return self.x(1, 0)
        return self.cat(self.x(1, 0), self._word(self._delta_inv(0), 0), self.mu(0, self.n - j + 1))


def koszul_diagonal_words(presentation):
    """
    The n+1 strings on the sectional path from M[γ^{m-1}]; entry d sits at
    distance d from the mouth of its tube.
    """
    n, l, m = (presentation.params[k] for k in ("n", "l", "m"))
    chunks = []
    v = n
    while v >= 2 and len(chunks) < n:
        chunks.append([Letter(f"a{v}", True), Letter(f"b{v - 1}")])
        v -= 2
    if len(chunks) < n:
        if v == 1:
            chunks.append([Letter("a1", True)] + [Letter("d")] * (l - 1))
            s = 0
            while len(chunks) < n:
                chunks.append([Letter(f"b{2 * s + 1}", True), Letter(f"a{2 * s + 2}")])
                s += 1
        else:
            chunks.append([Letter("d", True), Letter("a1")])
            s = 1
            while len(chunks) < n:
                chunks.append([Letter(f"b{2 * s}", True), Letter(f"a{2 * s + 1}")])
                s += 1
    letters = [Letter("g")] * (m - 1)
    words = [make_word(presentation, letters)]
    for chunk in chunks:
        letters = letters + chunk
        words.append(make_word(presentation, letters))
    logger.debug("Koszul diagonal: %s", [str(w) for w in words])
    return words

