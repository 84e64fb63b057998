//! Element-wise checkers for ordinary (untwisted) Hopf-theoretic identities.
//!
//! Everything here reads structure constants entry by entry and expands
//! both sides of each identity as sparse sums over basis tuples. Nothing goes
//! through the library's tensor-leg machinery, so agreement with the Hom
//! checkers at identity twists is an honest cross-check.

use std::collections::BTreeMap;

use hom_yd::actions::{ActionMap, CoactionMap};
use hom_yd::structures::{HomAlgebra, HomBialgebra, HomCoalgebra};
use hom_yd::{Field, Matrix, Scalar};

type Comb = Vec<(usize, Scalar)>;
type Comb2 = Vec<(usize, usize, Scalar)>;

/// A sparse sum of pure basis tensors.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
struct Sum(BTreeMap<Vec<usize>, Scalar>);

impl Sum {
    fn add(&mut self, key: Vec<usize>, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.0.get_mut(&key) {
            Some(v) => {
                *v = &*v + &c;
                if v.is_zero() {
                    self.0.remove(&key);
                }
            }
            None => {
                self.0.insert(key, c);
            }
        }
    }
}

fn nonzero_column(m: &Matrix, col: usize) -> Comb {
    (0..m.rows()).filter(|&r| !m.get(r, col).is_zero()).map(|r| (r, m.get(r, col).clone())).collect()
}

/// Multiplication table `e_i e_j = Σ c e_k` and unit of an algebra.
#[derive(Clone, Debug)]
pub struct AlgTable {
    pub field: Field,
    pub n: usize,
    mul: Vec<Vec<Comb>>,
    unit: Comb,
}

impl AlgTable {
    pub fn from_algebra(a: &HomAlgebra) -> Self {
        let n = a.dim();
        let mul = (0..n).map(|i| (0..n).map(|j| nonzero_column(a.mult(), i * n + j)).collect()).collect();
        AlgTable { field: a.field(), n, mul, unit: nonzero_column(a.unit(), 0) }
    }

    fn product(&self, i: usize, j: usize) -> &Comb {
        &self.mul[i][j]
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| sorted(&self.mul[i][j]) == sorted(&self.mul[j][i])))
    }
}

fn sorted(c: &Comb) -> Vec<(usize, Scalar)> {
    let mut v = c.clone();
    v.sort_by_key(|t| t.0);
    v
}

/// Comultiplication table `Δ(e_i) = Σ c e_p⊗e_q` and counit of a coalgebra.
#[derive(Clone, Debug)]
pub struct CoalgTable {
    pub field: Field,
    pub n: usize,
    com: Vec<Comb2>,
    cou: Vec<Scalar>,
}

impl CoalgTable {
    pub fn from_coalgebra(c: &HomCoalgebra) -> Self {
        let n = c.dim();
        let com = (0..n)
            .map(|i| nonzero_column(c.comult(), i).into_iter().map(|(r, v)| (r / n, r % n, v)).collect())
            .collect();
        let cou = (0..n).map(|i| c.counit().get(0, i).clone()).collect();
        CoalgTable { field: c.field(), n, com, cou }
    }

    pub fn is_cocommutative(&self) -> bool {
        (0..self.n).all(|i| {
            let mut fwd = Sum::default();
            let mut rev = Sum::default();
            for (p, q, c) in &self.com[i] {
                fwd.add(vec![*p, *q], c.clone());
                rev.add(vec![*q, *p], c.clone());
            }
            fwd == rev
        })
    }
}

/// `h_i ▷ m_j = Σ c m_k`.
#[derive(Clone, Debug)]
pub struct ActTable {
    act: Vec<Vec<Comb>>,
}

impl ActTable {
    pub fn from_action(a: &ActionMap) -> Self {
        let (n, m) = (a.acting().dim(), a.dim());
        ActTable { act: (0..n).map(|i| (0..m).map(|j| nonzero_column(a.matrix(), i * m + j)).collect()).collect() }
    }
}

/// `ρ(m_j) = Σ c h_i⊗m_k`.
#[derive(Clone, Debug)]
pub struct CoactTable {
    co: Vec<Comb2>,
}

impl CoactTable {
    pub fn from_coaction(c: &CoactionMap) -> Self {
        let m = c.dim();
        CoactTable {
            co: (0..m)
                .map(|j| nonzero_column(c.matrix(), j).into_iter().map(|(r, v)| (r / m, r % m, v)).collect())
                .collect(),
        }
    }
}

fn singles(c: &Comb) -> Sum {
    let mut s = Sum::default();
    for (k, v) in c {
        s.add(vec![*k], v.clone());
    }
    s
}

pub fn associative(a: &AlgTable) -> bool {
    let n = a.n;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut left = Sum::default();
                let mut right = Sum::default();
                for (p, c) in a.product(i, j) {
                    for (q, d) in a.product(*p, k) {
                        left.add(vec![*q], c * d);
                    }
                }
                for (p, c) in a.product(j, k) {
                    for (q, d) in a.product(i, *p) {
                        right.add(vec![*q], c * d);
                    }
                }
                if left != right {
                    return false;
                }
            }
        }
    }
    true
}

pub fn unital(a: &AlgTable) -> bool {
    (0..a.n).all(|i| {
        let mut left = Sum::default();
        let mut right = Sum::default();
        for (u, c) in &a.unit {
            for (q, d) in a.product(*u, i) {
                left.add(vec![*q], c * d);
            }
            for (q, d) in a.product(i, *u) {
                right.add(vec![*q], c * d);
            }
        }
        let me = singles(&vec![(i, a.field.one())]);
        left == me && right == me
    })
}

pub fn coassociative(c: &CoalgTable) -> bool {
    (0..c.n).all(|i| {
        let mut left = Sum::default();
        let mut right = Sum::default();
        for (p, q, x) in &c.com[i] {
            for (r, s, y) in &c.com[*p] {
                left.add(vec![*r, *s, *q], x * y);
            }
            for (r, s, y) in &c.com[*q] {
                right.add(vec![*p, *r, *s], x * y);
            }
        }
        left == right
    })
}

pub fn counital(c: &CoalgTable) -> bool {
    (0..c.n).all(|i| {
        let mut left = Sum::default();
        let mut right = Sum::default();
        for (p, q, x) in &c.com[i] {
            left.add(vec![*q], &c.cou[*p] * x);
            right.add(vec![*p], &c.cou[*q] * x);
        }
        let me = singles(&vec![(i, c.field.one())]);
        left == me && right == me
    })
}

/// Δ and ε are unital algebra maps.
pub fn compatible(a: &AlgTable, c: &CoalgTable) -> bool {
    let n = a.n;
    let f = a.field;
    for i in 0..n {
        for j in 0..n {
            let mut left = Sum::default();
            for (k, x) in a.product(i, j) {
                for (p, q, y) in &c.com[*k] {
                    left.add(vec![*p, *q], x * y);
                }
            }
            let mut right = Sum::default();
            for (p1, q1, x) in &c.com[i] {
                for (p2, q2, y) in &c.com[j] {
                    let xy = x * y;
                    for (p, u) in a.product(*p1, *p2) {
                        for (q, v) in a.product(*q1, *q2) {
                            right.add(vec![*p, *q], &xy * &(u * v));
                        }
                    }
                }
            }
            if left != right {
                return false;
            }
            let mut e = f.zero();
            for (k, x) in a.product(i, j) {
                e.add_product(x, &c.cou[*k]);
            }
            if e != &c.cou[i] * &c.cou[j] {
                return false;
            }
        }
    }
    let mut d1 = Sum::default();
    let mut e1 = f.zero();
    for (u, x) in &a.unit {
        for (p, q, y) in &c.com[*u] {
            d1.add(vec![*p, *q], x * y);
        }
        e1.add_product(x, &c.cou[*u]);
    }
    let mut uu = Sum::default();
    for (p, x) in &a.unit {
        for (q, y) in &a.unit {
            uu.add(vec![*p, *q], x * y);
        }
    }
    d1 == uu && e1.is_one()
}

pub fn bialgebra(a: &AlgTable, c: &CoalgTable) -> bool {
    associative(a) && unital(a) && coassociative(c) && counital(c) && compatible(a, c)
}

/// `S(x₁)x₂ = x₁S(x₂) = ε(x)1`, with `S(e_i)` the `i`-th column of `s`.
pub fn antipode(a: &AlgTable, c: &CoalgTable, s: &Matrix) -> bool {
    let sc: Vec<Comb> = (0..a.n).map(|i| nonzero_column(s, i)).collect();
    (0..a.n).all(|i| {
        let mut left = Sum::default();
        let mut right = Sum::default();
        for (p, q, x) in &c.com[i] {
            for (sp, y) in &sc[*p] {
                for (r, z) in a.product(*sp, *q) {
                    left.add(vec![*r], &(x * y) * z);
                }
            }
            for (sq, y) in &sc[*q] {
                for (r, z) in a.product(*p, *sq) {
                    right.add(vec![*r], &(x * y) * z);
                }
            }
        }
        let mut unit = Sum::default();
        for (u, x) in &a.unit {
            unit.add(vec![*u], &c.cou[i] * x);
        }
        left == unit && right == unit
    })
}

/// `h▷(h'▷m) = (hh')▷m` and `1▷m = m`.
pub fn module(h: &AlgTable, act: &ActTable, m: usize) -> bool {
    let n = h.n;
    for j in 0..m {
        for i in 0..n {
            for i2 in 0..n {
                let mut left = Sum::default();
                for (p, x) in &act.act[i2][j] {
                    for (q, y) in &act.act[i][*p] {
                        left.add(vec![*q], x * y);
                    }
                }
                let mut right = Sum::default();
                for (k, x) in h.product(i, i2) {
                    for (q, y) in &act.act[*k][j] {
                        right.add(vec![*q], x * y);
                    }
                }
                if left != right {
                    return false;
                }
            }
        }
        let mut unit = Sum::default();
        for (u, x) in &h.unit {
            for (q, y) in &act.act[*u][j] {
                unit.add(vec![*q], x * y);
            }
        }
        if unit != singles(&vec![(j, h.field.one())]) {
            return false;
        }
    }
    true
}

/// `h▷(ab) = (h₁▷a)(h₂▷b)` and `h▷1 = ε(h)1`.
pub fn module_algebra(hc: &CoalgTable, act: &ActTable, a: &AlgTable) -> bool {
    let m = a.n;
    for i in 0..hc.n {
        for x in 0..m {
            for y in 0..m {
                let mut left = Sum::default();
                for (p, c) in a.product(x, y) {
                    for (q, d) in &act.act[i][*p] {
                        left.add(vec![*q], c * d);
                    }
                }
                let mut right = Sum::default();
                for (h1, h2, c) in &hc.com[i] {
                    for (s, d) in &act.act[*h1][x] {
                        for (t, e) in &act.act[*h2][y] {
                            for (q, g) in a.product(*s, *t) {
                                right.add(vec![*q], &(c * d) * &(e * g));
                            }
                        }
                    }
                }
                if left != right {
                    return false;
                }
            }
        }
        let mut unit = Sum::default();
        for (u, c) in &a.unit {
            for (q, d) in &act.act[i][*u] {
                unit.add(vec![*q], c * d);
            }
        }
        let mut want = Sum::default();
        for (u, c) in &a.unit {
            want.add(vec![*u], &hc.cou[i] * c);
        }
        if unit != want {
            return false;
        }
    }
    true
}

/// `Δ(h▷a) = (h₁▷a₁)⊗(h₂▷a₂)` and `ε(h▷a) = ε(h)ε(a)`.
pub fn module_coalgebra(hc: &CoalgTable, act: &ActTable, ac: &CoalgTable) -> bool {
    for i in 0..hc.n {
        for x in 0..ac.n {
            let mut left = Sum::default();
            let mut e = ac.field.zero();
            for (p, c) in &act.act[i][x] {
                for (q, r, d) in &ac.com[*p] {
                    left.add(vec![*q, *r], c * d);
                }
                e.add_product(c, &ac.cou[*p]);
            }
            let mut right = Sum::default();
            for (h1, h2, c) in &hc.com[i] {
                for (a1, a2, d) in &ac.com[x] {
                    let cd = c * d;
                    for (q, u) in &act.act[*h1][*a1] {
                        for (r, v) in &act.act[*h2][*a2] {
                            right.add(vec![*q, *r], &cd * &(u * v));
                        }
                    }
                }
            }
            if left != right || e != &hc.cou[i] * &ac.cou[x] {
                return false;
            }
        }
    }
    true
}

/// `(Δ⊗id)ρ = (id⊗ρ)ρ` and `(ε⊗id)ρ = id`.
pub fn comodule(hc: &CoalgTable, co: &CoactTable) -> bool {
    co.co.iter().enumerate().all(|(j, terms)| {
        let mut left = Sum::default();
        let mut right = Sum::default();
        let mut counit = Sum::default();
        for (i, k, c) in terms {
            for (p, q, d) in &hc.com[*i] {
                left.add(vec![*p, *q, *k], c * d);
            }
            for (q, k2, d) in &co.co[*k] {
                right.add(vec![*i, *q, *k2], c * d);
            }
            counit.add(vec![*k], &hc.cou[*i] * c);
        }
        left == right && counit == singles(&vec![(j, hc.field.one())])
    })
}

/// `ρ(ab) = a₋₁b₋₁⊗a₀b₀` and `ρ(1) = 1⊗1`.
pub fn comodule_algebra(h: &AlgTable, co: &CoactTable, a: &AlgTable) -> bool {
    let m = a.n;
    for x in 0..m {
        for y in 0..m {
            let mut left = Sum::default();
            for (p, c) in a.product(x, y) {
                for (i, k, d) in &co.co[*p] {
                    left.add(vec![*i, *k], c * d);
                }
            }
            let mut right = Sum::default();
            for (hx, s, c) in &co.co[x] {
                for (hy, t, d) in &co.co[y] {
                    let cd = c * d;
                    for (i, u) in h.product(*hx, *hy) {
                        for (k, v) in a.product(*s, *t) {
                            right.add(vec![*i, *k], &cd * &(u * v));
                        }
                    }
                }
            }
            if left != right {
                return false;
            }
        }
    }
    let mut left = Sum::default();
    for (p, c) in &a.unit {
        for (i, k, d) in &co.co[*p] {
            left.add(vec![*i, *k], c * d);
        }
    }
    let mut right = Sum::default();
    for (i, c) in &h.unit {
        for (k, d) in &a.unit {
            right.add(vec![*i, *k], c * d);
        }
    }
    left == right
}

/// `a₋₁⊗a₀₁⊗a₀₂ = a₁₋₁a₂₋₁⊗a₁₀⊗a₂₀` and `a₋₁ε(a₀) = ε(a)1`.
pub fn comodule_coalgebra(h: &AlgTable, co: &CoactTable, ac: &CoalgTable) -> bool {
    for x in 0..ac.n {
        let mut left = Sum::default();
        let mut counit = Sum::default();
        for (i, s, c) in &co.co[x] {
            for (p, q, d) in &ac.com[*s] {
                left.add(vec![*i, *p, *q], c * d);
            }
            counit.add(vec![*i], c * &ac.cou[*s]);
        }
        let mut right = Sum::default();
        for (a1, a2, c) in &ac.com[x] {
            for (u, p, d) in &co.co[*a1] {
                for (v, q, e) in &co.co[*a2] {
                    let cde = &(c * d) * e;
                    for (i, g) in h.product(*u, *v) {
                        right.add(vec![*i, *p, *q], &cde * g);
                    }
                }
            }
        }
        let mut want = Sum::default();
        for (u, c) in &h.unit {
            want.add(vec![*u], &ac.cou[x] * c);
        }
        if left != right || counit != want {
            return false;
        }
    }
    true
}

/// `h₁m₋₁⊗h₂▷m₀ = (h₁▷m)₋₁h₂⊗(h₁▷m)₀`.
pub fn yetter_drinfeld(h: &AlgTable, hc: &CoalgTable, act: &ActTable, co: &CoactTable, m: usize) -> bool {
    for i in 0..h.n {
        for j in 0..m {
            let mut left = Sum::default();
            let mut right = Sum::default();
            for (h1, h2, c) in &hc.com[i] {
                for (u, s, d) in &co.co[j] {
                    let cd = c * d;
                    for (p, e) in h.product(*h1, *u) {
                        for (k, g) in &act.act[*h2][*s] {
                            left.add(vec![*p, *k], &cd * &(e * g));
                        }
                    }
                }
                for (t, d) in &act.act[*h1][j] {
                    let cd = c * d;
                    for (u, k, e) in &co.co[*t] {
                        for (p, g) in h.product(*u, *h2) {
                            right.add(vec![*p, *k], &cd * &(e * g));
                        }
                    }
                }
            }
            if left != right {
                return false;
            }
        }
    }
    true
}

/// `ε(ab) = ε(a)ε(b)`, `ε(1) = 1`, `Δ(1) = 1⊗1` on the carrier.
pub fn carrier_counit_unit(a: &AlgTable, c: &CoalgTable) -> bool {
    let f = a.field;
    for x in 0..a.n {
        for y in 0..a.n {
            let mut e = f.zero();
            for (k, v) in a.product(x, y) {
                e.add_product(v, &c.cou[*k]);
            }
            if e != &c.cou[x] * &c.cou[y] {
                return false;
            }
        }
    }
    let mut e1 = f.zero();
    let mut d1 = Sum::default();
    for (u, x) in &a.unit {
        e1.add_product(x, &c.cou[*u]);
        for (p, q, y) in &c.com[*u] {
            d1.add(vec![*p, *q], x * y);
        }
    }
    let mut uu = Sum::default();
    for (p, x) in &a.unit {
        for (q, y) in &a.unit {
            uu.add(vec![*p, *q], x * y);
        }
    }
    e1.is_one() && d1 == uu
}

/// `Δ(ab) = a₁(a₂₋₁▷b₁)⊗a₂₀b₂`.
pub fn braided_multiplicative(a: &AlgTable, ac: &CoalgTable, act: &ActTable, co: &CoactTable) -> bool {
    for x in 0..a.n {
        for y in 0..a.n {
            let mut left = Sum::default();
            for (k, c) in a.product(x, y) {
                for (p, q, d) in &ac.com[*k] {
                    left.add(vec![*p, *q], c * d);
                }
            }
            let mut right = Sum::default();
            for (x1, x2, c) in &ac.com[x] {
                for (u, s, d) in &co.co[*x2] {
                    for (y1, y2, e) in &ac.com[y] {
                        let cde = &(c * d) * e;
                        for (t, g) in &act.act[*u][*y1] {
                            for (p, g1) in a.product(*x1, *t) {
                                for (q, g2) in a.product(*s, *y2) {
                                    right.add(vec![*p, *q], &cde * &(&(g * g1) * g2));
                                }
                            }
                        }
                    }
                }
            }
            if left != right {
                return false;
            }
        }
    }
    true
}

/// The classical biproduct datum: `A` with algebra and coalgebra tables,
/// acted on and coacted on by the bialgebra `H`.
#[derive(Clone, Debug)]
pub struct Datum {
    pub h: AlgTable,
    pub hc: CoalgTable,
    pub a: AlgTable,
    pub ac: CoalgTable,
    pub act: ActTable,
    pub co: CoactTable,
}

/// Per-condition verdicts for a classical biproduct datum.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RadfordVerdicts {
    pub comodule_algebra: bool,
    pub module_coalgebra: bool,
    pub counit_unit: bool,
    pub braided_multiplicative: bool,
    pub yetter_drinfeld: bool,
}

impl RadfordVerdicts {
    pub fn all(&self) -> bool {
        self.comodule_algebra
            && self.module_coalgebra
            && self.counit_unit
            && self.braided_multiplicative
            && self.yetter_drinfeld
    }

    pub fn as_array(&self) -> [bool; 5] {
        [
            self.comodule_algebra,
            self.module_coalgebra,
            self.counit_unit,
            self.braided_multiplicative,
            self.yetter_drinfeld,
        ]
    }
}

impl Datum {
    pub fn new(h: &HomBialgebra, a: &HomAlgebra, ac: &HomCoalgebra, act: &ActionMap, co: &CoactionMap) -> Self {
        Datum {
            h: AlgTable::from_algebra(h.algebra()),
            hc: CoalgTable::from_coalgebra(h.coalgebra()),
            a: AlgTable::from_algebra(a),
            ac: CoalgTable::from_coalgebra(ac),
            act: ActTable::from_action(act),
            co: CoactTable::from_coaction(co),
        }
    }

    pub fn hypotheses(&self) -> bool {
        let m = self.a.n;
        associative(&self.a)
            && unital(&self.a)
            && coassociative(&self.ac)
            && counital(&self.ac)
            && module(&self.h, &self.act, m)
            && module_algebra(&self.hc, &self.act, &self.a)
            && comodule(&self.hc, &self.co)
            && comodule_coalgebra(&self.h, &self.co, &self.ac)
    }

    pub fn radford(&self) -> RadfordVerdicts {
        RadfordVerdicts {
            comodule_algebra: comodule_algebra(&self.h, &self.co, &self.a),
            module_coalgebra: module_coalgebra(&self.hc, &self.act, &self.ac),
            counit_unit: carrier_counit_unit(&self.a, &self.ac),
            braided_multiplicative: braided_multiplicative(&self.a, &self.ac, &self.act, &self.co),
            yetter_drinfeld: yetter_drinfeld(&self.h, &self.hc, &self.act, &self.co, self.a.n),
        }
    }

    /// Smash product `(a⊗h)(b⊗k) = a(h₁▷b)⊗h₂k` and smash coproduct
    /// `Δ(a⊗h) = a₁⊗a₂₋₁h₁⊗a₂₀⊗h₂` on `A⊗H`, indexed `a·dim H + h`.
    pub fn biproduct(&self) -> (AlgTable, CoalgTable) {
        let (m, n) = (self.a.n, self.h.n);
        let f = self.h.field;
        let dim = m * n;
        let idx = |a: usize, h: usize| a * n + h;
        let mut mul = vec![vec![Vec::new(); dim]; dim];
        for a in 0..m {
            for h in 0..n {
                for b in 0..m {
                    for k in 0..n {
                        let mut s = Sum::default();
                        for (h1, h2, c) in &self.hc.com[h] {
                            for (t, d) in &self.act.act[*h1][b] {
                                for (p, e) in self.a.product(a, *t) {
                                    for (q, g) in self.h.product(*h2, k) {
                                        s.add(vec![idx(*p, *q)], &(c * d) * &(e * g));
                                    }
                                }
                            }
                        }
                        mul[idx(a, h)][idx(b, k)] = s.0.into_iter().map(|(key, v)| (key[0], v)).collect();
                    }
                }
            }
        }
        let mut unit = Vec::new();
        for (u, x) in &self.a.unit {
            for (v, y) in &self.h.unit {
                unit.push((idx(*u, *v), x * y));
            }
        }
        let mut com = vec![Vec::new(); dim];
        let mut cou = vec![f.zero(); dim];
        for a in 0..m {
            for h in 0..n {
                let mut s = Sum::default();
                for (a1, a2, c) in &self.ac.com[a] {
                    for (u, r, d) in &self.co.co[*a2] {
                        for (h1, h2, e) in &self.hc.com[h] {
                            for (q, g) in self.h.product(*u, *h1) {
                                s.add(vec![idx(*a1, *q), idx(*r, *h2)], &(c * d) * &(e * g));
                            }
                        }
                    }
                }
                com[idx(a, h)] = s.0.into_iter().map(|(key, v)| (key[0], key[1], v)).collect();
                cou[idx(a, h)] = &self.ac.cou[a] * &self.hc.cou[h];
            }
        }
        (AlgTable { field: f, n: dim, mul, unit }, CoalgTable { field: f, n: dim, com, cou })
    }
}

/// Whether two tables describe the same algebra on the same indexing.
pub fn same_algebra(x: &AlgTable, y: &AlgTable) -> bool {
    x.n == y.n
        && sorted(&x.unit) == sorted(&y.unit)
        && (0..x.n).all(|i| (0..x.n).all(|j| sorted(&x.mul[i][j]) == sorted(&y.mul[i][j])))
}

/// Whether two tables describe the same coalgebra on the same indexing.
pub fn same_coalgebra(x: &CoalgTable, y: &CoalgTable) -> bool {
    let norm = |c: &Comb2| {
        let mut s = Sum::default();
        for (p, q, v) in c {
            s.add(vec![*p, *q], v.clone());
        }
        s
    };
    x.n == y.n && x.cou == y.cou && (0..x.n).all(|i| norm(&x.com[i]) == norm(&y.com[i]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use hom_yd::catalog::{kz2, taft};

    #[test]
    fn taft_is_a_noncommutative_noncocommutative_hopf_algebra() {
        let t = taft(Field::Rational);
        let a = AlgTable::from_algebra(t.bialgebra().algebra());
        let c = CoalgTable::from_coalgebra(t.bialgebra().coalgebra());
        assert!(bialgebra(&a, &c));
        assert!(antipode(&a, &c, t.antipode()));
        assert!(!a.is_commutative());
        assert!(!c.is_cocommutative());
    }

    #[test]
    fn wrong_antipode_is_rejected() {
        let f = Field::Rational;
        let h = kz2(f);
        let a = AlgTable::from_algebra(h.bialgebra().algebra());
        let c = CoalgTable::from_coalgebra(h.bialgebra().coalgebra());
        assert!(antipode(&a, &c, h.antipode()));
        assert!(!antipode(&a, &c, &Matrix::from_i64_rows(f, &[&[0, 1], &[1, 0]])));
    }
}
