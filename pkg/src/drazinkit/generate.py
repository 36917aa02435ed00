"""Seeded generators of instances that satisfy each formula's hypotheses.

The hypotheses are zero-product conditions, so unconstrained sampling would
essentially never hit them.  Each case has a few zero-pattern templates built
from explicit kernel bases; a template draw is then verified exactly and
redrawn on failure.  Randomness comes from ``random.Random`` seeded with a
string derived from the full generation spec and the attempt number, so an
instance depends on nothing but its own spec.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from .additive import ADDITIVE_FORMULAS, HypothesisReport, check_hypotheses
from .block import BLOCK_FORMULAS, BlockInstance, applicability_report
from .core import drazin_oracle
from .errors import GenerationExhausted
from .matrix import Matrix, block, identity, zeros

__all__ = ["CASES", "GenSpec", "Instance", "derive_seeds", "generate", "generate_batch", "nonvacuity_stats"]

CASES = ADDITIVE_FORMULAS + BLOCK_FORMULAS
MAX_RETRIES = 1000


@dataclass(frozen=True)
class GenSpec:
    """What to generate.

    Additive cases use ``n`` as the matrix size; block cases use ``m`` and
    ``n`` as the sizes of A and D.
    """

    case_id: str
    seed: int
    m: int = 2
    n: int = 2
    entry_bound: int = 2

    def __post_init__(self):
        if self.case_id not in CASES:
            raise ValueError(f"unknown case {self.case_id!r}; expected one of {CASES}")
        if self.m < 1 or self.n < 1 or self.entry_bound < 1:
            raise ValueError("sizes and entry bound must be positive")
        if not 0 <= self.seed < 2 ** 64:
            raise ValueError("seed must be an unsigned 64-bit integer")


@dataclass(frozen=True)
class Instance:
    """A generated input: ``pair`` for additive cases, ``blocks`` for block cases."""

    spec: GenSpec
    report: HypothesisReport
    pair: tuple[Matrix, Matrix] | None = None
    blocks: BlockInstance | None = None
    template: str = ""
    flags: dict = field(default_factory=dict)

    @property
    def summed(self) -> Matrix:
        """The matrix whose Drazin inverse the formula computes."""
        if self.blocks is not None:
            return block([[self.blocks.a, self.blocks.b], [self.blocks.c, self.blocks.d]])
        p, q = self.pair
        if self.spec.case_id == "antitri":
            n = p.rows
            return block([[p, identity(n)], [q, zeros(n)]])
        return p + q


# -- random building blocks ---------------------------------------------------

class _Draw:
    def __init__(self, rng: random.Random, bound: int, complex_entries: bool):
        self.rng = rng
        self.bound = bound
        self.complex = complex_entries

    def entry(self):
        b = self.bound
        re = self.rng.randint(-b, b)
        im = self.rng.randint(-b, b) if self.complex and self.rng.random() < 0.5 else 0
        return complex(re, im) if im else re

    def matrix(self, rows: int, cols: int, density: float = 0.7) -> Matrix:
        return Matrix.from_rows([[self.entry() if self.rng.random() < density else 0
                                  for _ in range(cols)] for _ in range(rows)])

    def low_rank(self, rows: int, cols: int, rank: int) -> Matrix:
        if rank == 0 or rows == 0 or cols == 0:
            return zeros(rows, cols)
        return self.matrix(rows, rank) @ self.matrix(rank, cols)

    def unimodular(self, n: int) -> tuple[Matrix, Matrix]:
        """Integer S with integer inverse: permuted product of unit triangulars."""
        rng = self.rng
        lower = [[1 if i == j else (rng.randint(-1, 1) if j < i else 0) for j in range(n)] for i in range(n)]
        upper = [[1 if i == j else (rng.randint(-1, 1) if j > i else 0) for j in range(n)] for i in range(n)]
        perm = list(range(n))
        rng.shuffle(perm)
        pm = Matrix.from_rows([[1 if perm[i] == j else 0 for j in range(n)] for i in range(n)])
        s = pm @ Matrix.from_rows(lower) @ Matrix.from_rows(upper)
        return s, s.inverse()

    def nilpotent(self, n: int) -> Matrix:
        if n == 0:
            return zeros(0)
        return Matrix.from_rows([[self.entry() if j > i else 0 for j in range(n)] for i in range(n)])

    def invertible(self, n: int) -> Matrix:
        while True:
            x = self.matrix(n, n, density=0.9)
            if x.rank() == n:
                return x

    def singular(self, n: int) -> Matrix:
        """A matrix with a nontrivial nilpotent part (invertible part may be empty)."""
        # favour a nilpotent part of index >= 2 so that products like B D survive B D^2 = 0
        k = self.rng.randint(0, n - 2) if n >= 2 and self.rng.random() < 0.7 else self.rng.randint(0, n - 1)
        core = self.invertible(k) if k else zeros(0)
        nil = self.nilpotent(n - k)
        s, s_inv = self.unimodular(n)
        return s @ _diag(core, nil) @ s_inv


def _diag(x: Matrix, y: Matrix) -> Matrix:
    if x.rows == 0:
        return y
    if y.rows == 0:
        return x
    return block([[x, zeros(x.rows, y.cols)], [zeros(y.rows, x.cols), y]])


def _integral(x: Matrix) -> Matrix:
    """Clear the common denominator so entries are Gaussian integers."""
    return x * x._den if x.cols and x.rows else x


def _kernel(x: Matrix) -> Matrix:
    """Integral basis (as columns) of the right kernel."""
    return _integral(x.null_space_basis())


def _cokernel(x: Matrix) -> Matrix:
    """Integral basis (as rows) of the left kernel."""
    return _kernel(x.T).T


def _combine(d: _Draw, basis: Matrix, cols: int) -> Matrix:
    """Random combination of the columns of ``basis``, ``cols`` of them."""
    if basis.cols == 0:
        return zeros(basis.rows, cols)
    return basis @ d.matrix(basis.cols, cols)


def _combine_rows(d: _Draw, basis: Matrix, rows: int) -> Matrix:
    if basis.rows == 0:
        return zeros(rows, basis.cols)
    return d.matrix(rows, basis.rows) @ basis


# -- templates: additive cases -------------------------------------------------

def _similar(d: _Draw, *mats: Matrix) -> tuple[Matrix, ...]:
    s, s_inv = d.unimodular(mats[0].rows)
    return tuple(s @ x @ s_inv for x in mats)


def _pair_pq0(d: _Draw, n: int):
    p = d.low_rank(n, n, d.rng.randint(0, n - 1)) if d.rng.random() < 0.8 else d.singular(n)
    q = _combine(d, _kernel(p), n)
    return (p, q), "kernel"


def _pair_antitri(d: _Draw, n: int):
    # core-nilpotent coordinates of F: F = diag(F1, N), E = [[E11, 0], [E21, E22]], N E22 = 0
    k = d.rng.randint(0, n)
    r = n - k
    f1 = d.invertible(k) if k else zeros(0)
    nil = d.nilpotent(r)
    f = _diag(f1, nil)
    e22 = _combine(d, _kernel(nil), r) if r else zeros(0)
    if k and r:
        e = block([[d.matrix(k, k), zeros(k, r)], [d.matrix(r, k), e22]])
    elif k:
        e = d.matrix(k, k)
    else:
        e = e22
    e, f = _similar(d, e, f)
    return (e, f), f"core{k}"


def _pair_pqp0(d: _Draw, n: int):
    if n == 1:
        return _pair_pq0(d, n)
    if d.rng.random() < 0.6:
        # P = U V with V Q^2 = 0 and V Q U = 0
        q = d.singular(n)
        r = d.rng.randint(1, n)
        v = _combine_rows(d, _cokernel(q @ q), r)
        u = _combine(d, _kernel(v @ q), r)
        return (u @ v, q), "factored"
    # P = [[A, B], [C, 0]], Q = [[0, 0], [0, D]] with BD^2 = 0 and BDC = 0
    n1 = d.rng.randint(1, n - 1)
    n2 = n - n1
    dd = d.singular(n2)
    b = _combine_rows(d, _cokernel(dd @ dd), n1)
    c = _combine(d, _kernel(b @ dd), n1)
    a = d.matrix(n1, n1)
    p = block([[a, b], [c, zeros(n2)]])
    q = _diag(zeros(n1), dd)
    p, q = _similar(d, p, q)
    return (p, q), f"split{n1}"


def _pair_q20(d: _Draw, n: int):
    if n == 1:
        return (d.matrix(1, 1), zeros(1)), "trivial"
    m1 = d.rng.randint(1, n - 1)
    inst, name = _blocks_bcb(d, m1, n - m1)
    p = block([[inst.a, inst.b], [zeros(n - m1, m1), inst.d]])
    q = block([[zeros(m1), zeros(m1, n - m1)], [inst.c, zeros(n - m1)]])
    p, q = _similar(d, p, q)
    return (p, q), name


# -- templates: block cases -----------------------------------------------------

def _blocks_bcb(d: _Draw, m: int, n: int):
    # [B; D] C [A B] = 0 through C = X Y with Y [A B] = 0 or [B; D] X = 0
    r = d.rng.randint(1, max(1, min(m, n)))
    if d.rng.random() < 0.75:
        ab = d.low_rank(m, m + n, d.rng.randint(min(1, m - 1), m - 1))
        a, b = ab[:, :m], ab[:, m:]
        y = _combine_rows(d, _cokernel(ab), r)
        x = d.matrix(n, r)
        dd = d.matrix(n, n)
        name = "left"
    else:
        a = d.matrix(m, m)
        bd = d.low_rank(m + n, n, d.rng.randint(0, n - 1))
        b, dd = bd[:m, :], bd[m:, :]
        x = _combine(d, _kernel(bd), r)
        y = d.matrix(r, m)
        name = "right"
    return BlockInstance(a, b, x @ y, dd), name


def _blocks_bdc(d: _Draw, m: int, n: int):
    # C = X Y with Y [A B] = 0 and (BD) X = 0, B D^2 = 0
    dd = d.singular(n)
    r = d.rng.randint(1, m)
    y = d.matrix(r, m)
    ky = _kernel(y)
    a = _combine(d, ky, m) if ky.cols else zeros(m)
    left_d2 = _cokernel(dd @ dd)
    if ky.cols and left_d2.rows:
        b = ky @ d.matrix(ky.cols, left_d2.rows) @ left_d2
    else:
        b = zeros(m, n)
    x = _combine(d, _kernel(b @ dd), r)
    if d.rng.random() < 0.25:
        # example-like variant: no Y constraint on A, C kills B instead
        a = d.matrix(m, m)
        b = _combine_rows(d, left_d2, m) if left_d2.rows else zeros(m, n)
        x = _combine(d, _kernel(block([[b], [b @ dd]])), r)
        return BlockInstance(a, b, x @ d.matrix(r, m), dd), "kernel"
    return BlockInstance(a, b, x @ y, dd), "product"


def _blocks_abc(d: _Draw, m: int, n: int):
    # [A; C] B [C D] = 0 through B = X Y with Y [C D] = 0, or the transpose of a bcb draw
    if d.rng.random() < 0.3:
        inst, name = _blocks_bcb(d, m, n)
        return inst.transpose(), "dual-" + name
    cd = d.low_rank(n, m + n, d.rng.randint(min(1, n - 1), n - 1))
    c, dd = cd[:, :m], cd[:, m:]
    r = d.rng.randint(1, max(1, min(m, n)))
    y = _combine_rows(d, _cokernel(cd), r)
    return BlockInstance(d.matrix(m, m), d.matrix(m, r) @ y, c, dd), "left"


def _blocks_cab(d: _Draw, m: int, n: int):
    # A^2 B = 0; C = X Y with Y A B = 0 and (Y B) [X D] = 0
    a = d.singular(m)
    b = _combine(d, _kernel(a @ a), n)
    r = d.rng.randint(1, m)
    y = _combine_rows(d, _cokernel(a @ b), r)
    w = y @ b
    kw = _kernel(w)
    x = _combine(d, kw, r)
    dd = _combine(d, kw, n) if d.rng.random() < 0.7 else zeros(n)
    return BlockInstance(a, b, x @ y, dd), "product"


_PAIR_TEMPLATES = {
    "pq0": _pair_pq0,
    "antitri": _pair_antitri,
    "pqq0": _pair_pqp0,
    "pqp0": _pair_pqp0,
    "q20": _pair_q20,
}
_BLOCK_TEMPLATES = {
    "bcb": _blocks_bcb,
    "bdc": _blocks_bdc,
    "abc": _blocks_abc,
    "cab": _blocks_cab,
}


def _block_similarity(d: _Draw, inst: BlockInstance) -> BlockInstance:
    s1, s1_inv = d.unimodular(inst.m)
    s2, s2_inv = d.unimodular(inst.n)
    return BlockInstance(s1 @ inst.a @ s1_inv, s1 @ inst.b @ s2_inv,
                         s2 @ inst.c @ s1_inv, s2 @ inst.d @ s2_inv)


def _rng(spec: GenSpec, attempt: int) -> random.Random:
    return random.Random(f"{spec.case_id}:{spec.seed}:{spec.m}:{spec.n}:{spec.entry_bound}:{attempt}")


def _pair_flags(case: str, p: Matrix, q: Matrix) -> dict:
    if case == "antitri":
        return {"F!=0": not q.is_zero, "F^pi!=I": not drazin_oracle(q).drazin.is_zero}
    pq = p @ q
    flags = {"PQ!=0": not pq.is_zero, "QP!=0": not (q @ p).is_zero, "PQP!=0": not (pq @ p).is_zero,
             "(PQ)^pi!=I": not drazin_oracle(pq).drazin.is_zero}
    flags["weaker"] = flags["PQP!=0"] and case in ("pqq0", "q20")
    return flags


def generate(spec: GenSpec) -> Instance:
    """Draw an instance satisfying the hypotheses of ``spec.case_id``.

    Raises :class:`GenerationExhausted` after ``MAX_RETRIES`` failed draws.
    """
    for attempt in range(MAX_RETRIES):
        rng = _rng(spec, attempt)
        d = _Draw(rng, spec.entry_bound, complex_entries=rng.random() < 0.5)
        if spec.case_id in _PAIR_TEMPLATES:
            (p, q), name = _PAIR_TEMPLATES[spec.case_id](d, spec.n)
            report = check_hypotheses(spec.case_id, p, q)
            if report.all_hold:
                return Instance(spec, report, pair=(p, q), template=name,
                                flags=_pair_flags(spec.case_id, p, q))
        else:
            inst, name = _BLOCK_TEMPLATES[spec.case_id](d, spec.m, spec.n)
            inst = _block_similarity(d, inst)
            reports = applicability_report(inst)
            report = reports[spec.case_id]
            if report.all_hold:
                return Instance(spec, report, blocks=inst, template=name, flags=dict(report.flags))
    raise GenerationExhausted(f"no {spec.case_id} instance for {spec} after {MAX_RETRIES} draws")


def derive_seeds(case_id: str, seed: int, count: int) -> list[int]:
    """Independent 64-bit seeds for a batch, a pure function of the inputs."""
    root = random.Random(f"batch:{case_id}:{seed}")
    return [root.getrandbits(64) for _ in range(count)]


def generate_batch(case_id: str, seed: int, count: int, sizes=(2, 3), entry_bound: int = 2) -> list[Instance]:
    """``count`` instances with per-instance seeds split from ``seed``.

    Sizes cycle through ``sizes`` (for block cases, m and n independently).
    """
    out = []
    for i, sub_seed in enumerate(derive_seeds(case_id, seed, count)):
        m = sizes[i % len(sizes)]
        n = sizes[(i // len(sizes)) % len(sizes)]
        if case_id in ADDITIVE_FORMULAS:
            m, n = 1, sizes[i % len(sizes)]
        out.append(generate(GenSpec(case_id, sub_seed, m, n, entry_bound)))
    return out


def nonvacuity_stats(case_id: str, count: int, seed: int, sizes=(2, 3)) -> dict:
    """Fraction of generated instances on which each interesting flag is set."""
    if count < 1:
        raise ValueError("count must be positive")
    batch = generate_batch(case_id, seed, count, sizes)
    keys = sorted({k for inst in batch for k in inst.flags})
    fractions = {k: sum(bool(inst.flags.get(k)) for inst in batch) / count for k in keys}
    templates = {}
    for inst in batch:
        templates[inst.template] = templates.get(inst.template, 0) + 1
    return {"case": case_id, "count": count, "seed": seed, "fractions": fractions, "templates": templates}
