//! Seeded random biproduct data over GF(7) built from small abelian groups.
//!
//! `H` is a Yau twist of `K[G]` by a group automorphism of order at most two.
//! The carrier `A` is either the square-zero line `K{1, z}` with `z` primitive
//! or a twisted group algebra `K[G']`. Actions and coactions come from
//! characters, gradings and automorphism actions, twisted the same way as the
//! carrier, with occasional random perturbations.

use std::sync::Arc;

use hom_yd::actions::{ActionMap, CoactionMap};
use hom_yd::catalog::{group_algebra, line_algebra};
use hom_yd::constructions::BiproductData;
use hom_yd::structures::{yau_twist, HomBialgebra, HomHopf};
use hom_yd::{Field, Matrix, Result, Scalar};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A finite group by its multiplication table; element 0 is the identity.
#[derive(Clone, Debug)]
pub struct Group {
    pub name: &'static str,
    pub labels: Vec<String>,
    pub table: Vec<Vec<usize>>,
}

impl Group {
    pub fn cyclic(n: usize, name: &'static str, letter: &str) -> Self {
        let labels = (0..n)
            .map(|i| match i {
                0 => "1".to_string(),
                1 => letter.to_string(),
                _ => format!("{letter}{i}"),
            })
            .collect();
        Group { name, labels, table: (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect() }
    }

    pub fn klein(a: &str, b: &str) -> Self {
        let labels = vec!["1".to_string(), a.to_string(), b.to_string(), format!("{a}{b}")];
        let table = (0..4).map(|i| (0..4).map(|j| i ^ j).collect()).collect();
        Group { name: "Z2xZ2", labels, table }
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn op(&self, i: usize, j: usize) -> usize {
        self.table[i][j]
    }

    /// All group homomorphisms into `target`, as image tables.
    pub fn homomorphisms(&self, target: &Group) -> Vec<Vec<usize>> {
        all_maps(self.order(), target.order())
            .into_iter()
            .filter(|f| {
                (0..self.order()).all(|i| (0..self.order()).all(|j| f[self.op(i, j)] == target.op(f[i], f[j])))
            })
            .collect()
    }

    /// Automorphisms `σ` with `σ² = id`.
    pub fn involutions(&self) -> Vec<Vec<usize>> {
        self.homomorphisms(self)
            .into_iter()
            .filter(|f| {
                let mut seen = vec![false; f.len()];
                f.iter().all(|&x| !std::mem::replace(&mut seen[x], true)) && (0..f.len()).all(|i| f[f[i]] == i)
            })
            .collect()
    }

    /// Automorphisms of any order.
    pub fn automorphisms(&self) -> Vec<Vec<usize>> {
        self.homomorphisms(self)
            .into_iter()
            .filter(|f| {
                let mut s = f.clone();
                s.sort_unstable();
                s.dedup();
                s.len() == f.len()
            })
            .collect()
    }

    /// Characters into the multiplicative group of GF(`p`), as residues.
    pub fn characters(&self, p: u64) -> Vec<Vec<u64>> {
        let n = self.order();
        let mut out = Vec::new();
        let mut cur = vec![1u64; n];
        fn rec(g: &Group, p: u64, i: usize, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
            if i == cur.len() {
                let ok = (0..cur.len())
                    .all(|x| (0..cur.len()).all(|y| cur[g.op(x, y)] == cur[x] * cur[y] % p));
                if ok {
                    out.push(cur.clone());
                }
                return;
            }
            for v in 1..p {
                cur[i] = v;
                rec(g, p, i + 1, cur, out);
            }
        }
        rec(self, p, 0, &mut cur, &mut out);
        out
    }
}

fn all_maps(dom: usize, cod: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..dom {
        out = out.into_iter().flat_map(|f| (0..cod).map(move |v| [f.clone(), vec![v]].concat())).collect();
    }
    out
}

fn permutation(field: Field, f: &[usize]) -> Matrix {
    let n = f.len();
    Matrix::from_fn(field, n, n, |r, c| if f[c] == r { field.one() } else { field.zero() })
}

/// A generated datum together with the Hom-Hopf algebra that acts.
#[derive(Clone, Debug)]
pub struct Instance {
    pub label: String,
    pub hopf: HomHopf,
    pub data: BiproductData,
}

impl Instance {
    pub fn h(&self) -> &HomBialgebra {
        self.hopf.bialgebra()
    }

    /// Every twist in the datum is the identity.
    pub fn classical(&self) -> bool {
        self.h().twist().is_identity() && self.data.algebra().twist().is_identity()
    }
}

/// The seeded instance source.
pub struct Generator {
    rng: ChaCha8Rng,
    field: Field,
    groups: Vec<Group>,
}

impl Generator {
    pub fn new(seed: u64) -> Self {
        let groups = vec![
            Group::cyclic(2, "Z2", "a"),
            Group::cyclic(3, "Z3", "a"),
            Group::klein("a", "b"),
            Group::cyclic(4, "Z4", "a"),
        ];
        Generator { rng: ChaCha8Rng::seed_from_u64(seed), field: Field::Prime(7), groups }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    fn pick<T: Clone>(&mut self, xs: &[T]) -> T {
        xs.choose(&mut self.rng).expect("nonempty choice").clone()
    }

    fn scalar(&self, residue: u64) -> Scalar {
        self.field.from_i64(residue as i64)
    }

    fn acting(&mut self) -> Result<(Group, Vec<usize>, HomHopf)> {
        let g = self.pick(&self.groups.clone());
        let sigma = self.pick(&g.involutions());
        let classical = group_algebra(self.field, &g.labels, |i, j| g.op(i, j))?;
        let h = yau_twist(&classical, &permutation(self.field, &sigma))?;
        Ok((g, sigma, h))
    }

    /// One candidate datum; it may fail the biproduct hypotheses.
    pub fn candidate(&mut self) -> Result<Instance> {
        if self.rng.gen_bool(0.5) {
            self.line()
        } else {
            self.grouplike()
        }
    }

    /// Candidates until `want` pass the hypotheses or `budget` are drawn.
    pub fn admissible(&mut self, want: usize, budget: usize) -> Result<(Vec<Instance>, usize)> {
        let mut out = Vec::new();
        let mut drawn = 0;
        while out.len() < want && drawn < budget {
            drawn += 1;
            let inst = self.candidate()?;
            if hom_yd::constructions::check_biproduct_hypotheses(&inst.data)?.passed() {
                out.push(inst);
            }
        }
        Ok((out, drawn))
    }

    fn line(&mut self) -> Result<Instance> {
        let f = self.field;
        let (g, sigma, hopf) = self.acting()?;
        let n = g.order();
        let lambda = self.pick(&[1i64, -1]);
        let lam = f.from_i64(lambda);
        let (alg, coalg) = line_algebra(f, &lam)?;
        let chi = self.pick(&g.characters(7));
        let c = self.rng.gen_range(0..n);
        let mut scale = f.one();
        let mut note = String::new();
        if self.rng.gen_bool(0.15) {
            let r = self.rng.gen_range(2..7);
            scale = self.scalar(r);
            note = format!(" coaction×{scale}");
        }
        // α_A∘▷ and ρ∘α_A, with α_A = diag(1, λ).
        let h = Arc::new(hopf.bialgebra().clone());
        let twist = alg.twist().map().clone();
        let mut act = Matrix::zeros(f, 2, 2 * n);
        for (i, &c) in chi.iter().enumerate() {
            act.set(0, i * 2, f.one());
            act.set(1, i * 2 + 1, &self.scalar(c) * &lam);
        }
        let mut co = Matrix::zeros(f, 2 * n, 2);
        co.set(0, 0, f.one());
        co.set(c * 2 + 1, 1, &lam * &scale);
        let action = ActionMap::new_unchecked(h.clone(), alg.basis().clone(), act, twist.clone())?;
        let coaction = CoactionMap::new_unchecked(h, alg.basis().clone(), co, twist)?;
        let label = format!("line λ={lambda} over {} σ={sigma:?} χ={chi:?} c={}{note}", g.name, g.labels[c]);
        Ok(Instance { label, hopf, data: BiproductData::new(alg, coalg, action, coaction)? })
    }

    fn grouplike(&mut self) -> Result<Instance> {
        let f = self.field;
        let (g, sigma, hopf) = self.acting()?;
        let n = g.order();
        let carriers = [Group::cyclic(2, "Z2", "x"), Group::cyclic(3, "Z3", "x"), Group::klein("x", "y")];
        let allowed: Vec<Group> = carriers.into_iter().filter(|k| k.order() * n <= 12).collect();
        let k = self.pick(&allowed);
        let m = k.order();
        let tau = self.pick(&k.involutions());
        let classical = group_algebra(f, &k.labels, |i, j| k.op(i, j))?;
        let a = yau_twist(&classical, &permutation(f, &tau))?;
        let (alg, coalg) = (a.bialgebra().algebra().clone(), a.bialgebra().coalgebra().clone());
        let twist = alg.twist().map().clone();
        let h = Arc::new(hopf.bialgebra().clone());

        // Classical action h_i ▷ x_j = coeff · x_{image}.
        let (kind, images, coeffs): (String, Vec<Vec<usize>>, Vec<Vec<u64>>) = match self.rng.gen_range(0..3) {
            0 => ("trivial action".into(), vec![(0..m).collect(); n], vec![vec![1; m]; n]),
            1 => {
                let psi = self.pick(&g.characters(7));
                let omega = self.pick(&k.characters(7));
                let coeffs = (0..n)
                    .map(|i| (0..m).map(|j| if psi[i] == 6 && omega[j] == 6 { 6 } else { 1 }).collect())
                    .collect();
                ("sign bicharacter action".into(), vec![(0..m).collect(); n], coeffs)
            }
            _ => {
                let auts = k.automorphisms();
                let homs: Vec<Vec<usize>> = all_maps(n, auts.len())
                    .into_iter()
                    .filter(|phi| {
                        (0..n).all(|x| {
                            (0..n).all(|y| {
                                let lhs = &auts[phi[g.op(x, y)]];
                                let (px, py) = (&auts[phi[x]], &auts[phi[y]]);
                                (0..m).all(|e| lhs[e] == px[py[e]])
                            })
                        })
                    })
                    .collect();
                let phi = self.pick(&homs);
                let images = (0..n).map(|i| auts[phi[i]].clone()).collect();
                ("automorphism action".into(), images, vec![vec![1; m]; n])
            }
        };
        let mut act = Matrix::zeros(f, m, n * m);
        for i in 0..n {
            for j in 0..m {
                let t = tau[images[i][j]];
                act.set(t, i * m + j, self.scalar(coeffs[i][j]));
            }
        }
        // Classical coaction x_j ↦ g_{φ(j)} ⊗ x_j.
        let (cokind, grading) = if self.rng.gen_bool(0.5) {
            ("trivial coaction".to_string(), vec![0; m])
        } else {
            ("grading".to_string(), self.pick(&k.homomorphisms(&g)))
        };
        let mut co = Matrix::zeros(f, n * m, m);
        for (j, &t) in tau.iter().enumerate() {
            co.set(grading[t] * m + t, j, f.one());
        }
        let mut note = String::new();
        if self.rng.gen_bool(0.15) {
            let (r, c) = (self.rng.gen_range(0..m), self.rng.gen_range(0..n * m));
            let e = self.rng.gen_range(1..7);
            let v = self.scalar(e);
            note = format!(" action[{r},{c}]+={v}");
            let cur = act.get(r, c) + &v;
            act.set(r, c, cur);
        }
        let action = ActionMap::new_unchecked(h.clone(), alg.basis().clone(), act, twist.clone())?;
        let coaction = CoactionMap::new_unchecked(h, alg.basis().clone(), co, twist)?;
        let label = format!(
            "K[{}] τ={tau:?} over {} σ={sigma:?}: {kind}, {cokind} {grading:?}{note}",
            k.name, g.name
        );
        Ok(Instance { label, hopf, data: BiproductData::new(alg, coalg, action, coaction)? })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_tables_have_expected_symmetries() {
        assert_eq!(Group::cyclic(4, "Z4", "a").involutions().len(), 2);
        assert_eq!(Group::klein("a", "b").involutions().len(), 4);
        assert_eq!(Group::klein("a", "b").automorphisms().len(), 6);
        assert_eq!(Group::cyclic(3, "Z3", "a").characters(7).len(), 3);
        assert_eq!(Group::cyclic(4, "Z4", "a").characters(7).len(), 2);
    }

    #[test]
    fn same_seed_same_stream() {
        let a: Vec<String> = {
            let mut g = Generator::new(11);
            (0..5).map(|_| g.candidate().unwrap().label).collect()
        };
        let mut g = Generator::new(11);
        let b: Vec<String> = (0..5).map(|_| g.candidate().unwrap().label).collect();
        assert_eq!(a, b);
    }
}
