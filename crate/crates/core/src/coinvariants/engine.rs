//! Degree-by-degree normal forms for the quotient `R_n / I_n`.
//!
//! Each homogeneous component is described by its standard monomials (those
//! that are not leading monomials of `I_n` in that degree) and the normal
//! form of every monomial in terms of them. A component is computed from the
//! components one variable below it:
//!
//! * a monomial `v·p` whose cofactor `p` is a leading monomial one degree
//!   lower (for a commuting variable `v`) is rewritten as `v·NF(p)`;
//! * the monomials left over form the candidate set `U`;
//! * every spanning relation of `I_d` (`v·(p − NF(p))` for all variables and
//!   all lower leading monomials, plus the generators of degree exactly `d`)
//!   is rewritten into `U` and row-reduced.
//!
//! The rewrite only subtracts elements of the ideal and the rewrite rules
//! have distinct leading monomials outside `U`, so `dim I_d` is the number
//! of rules plus the rank of the rewritten relations.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use crate::combinatorics::Permutation;
use crate::exactalg::{EchelonBuilder, Scalar, SparseVec};
use crate::superring::{enumerate_monomials, generators, Generator, SuperMonomial, TriDegree, Var};

/// Normal-form data for one homogeneous component of the quotient.
#[derive(Debug)]
pub struct ComponentNf<T> {
    degree: TriDegree,
    monomials: Vec<SuperMonomial>,
    index: HashMap<SuperMonomial, u32>,
    standard: Vec<u32>,
    is_standard: Vec<bool>,
    /// Per monomial: coordinates of its normal form over `standard`.
    nf: Vec<SparseVec<T>>,
}

impl<T: Scalar> ComponentNf<T> {
    pub fn degree(&self) -> TriDegree {
        self.degree
    }

    pub fn ring_dim(&self) -> usize {
        self.monomials.len()
    }

    /// `dim M_n^{(a,b,c)}`.
    pub fn dim(&self) -> usize {
        self.standard.len()
    }

    /// `dim I_n^{(a,b,c)}`.
    pub fn ideal_rank(&self) -> usize {
        self.monomials.len() - self.standard.len()
    }

    pub fn monomials(&self) -> &[SuperMonomial] {
        &self.monomials
    }

    pub fn standard_monomials(&self) -> impl Iterator<Item = &SuperMonomial> {
        self.standard.iter().map(|&i| &self.monomials[i as usize])
    }

    pub fn index_of(&self, m: &SuperMonomial) -> Option<usize> {
        self.index.get(m).map(|&i| i as usize)
    }

    fn standard_monomial(&self, pos: usize) -> &SuperMonomial {
        &self.monomials[self.standard[pos] as usize]
    }

    fn leading(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.monomials.len()).filter(|&i| !self.is_standard[i])
    }

    /// Normal form of a monomial of this degree.
    pub fn normal_form(&self, m: &SuperMonomial) -> &SparseVec<T> {
        &self.nf[self.index[m] as usize]
    }

    fn signed_nf(&self, sign: i64, m: &SuperMonomial) -> SparseVec<T> {
        let mut v = self.normal_form(m).clone();
        if sign < 0 {
            v.scale(&T::from_int(-1));
        }
        v
    }

    /// Trace of the signed permutation action on this quotient component.
    pub fn trace(&self, sigma: &Permutation) -> T {
        let mut tr = T::zero();
        for (pos, m) in self.standard_monomials().enumerate() {
            let (s, image) = m.permute(sigma);
            let c = self.normal_form(&image).get(pos);
            if s < 0 {
                tr -= c;
            } else {
                tr += c;
            }
        }
        tr
    }

    /// Whether `σ` maps every ideal element `p − NF(p)` back into the ideal.
    pub fn is_stable_under(&self, sigma: &Permutation) -> bool {
        self.leading().all(|i| {
            let (s, image) = self.monomials[i].permute(sigma);
            let mut v = self.signed_nf(s, &image);
            for (pos, c) in self.nf[i].entries() {
                let (s2, img2) = self.standard_monomial(*pos).permute(sigma);
                v.axpy(&(-c.clone()), &self.signed_nf(s2, &img2));
            }
            v.is_zero()
        })
    }
}

/// Computes and memoizes [`ComponentNf`] for every requested degree.
pub struct ModuleEngine<T> {
    n: usize,
    generators: Vec<Generator<T>>,
    components: RwLock<HashMap<TriDegree, Arc<ComponentNf<T>>>>,
}

impl<T: Scalar> ModuleEngine<T> {
    pub fn new(n: usize) -> Self {
        ModuleEngine {
            n,
            generators: generators(n),
            components: RwLock::new(HashMap::new()),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cached(&self, d: TriDegree) -> Option<Arc<ComponentNf<T>>> {
        self.components.read().expect("engine lock poisoned").get(&d).cloned()
    }

    /// Drops memoized components for which `keep` is false.
    pub fn retain(&self, keep: impl Fn(&TriDegree) -> bool) {
        self.components
            .write()
            .expect("engine lock poisoned")
            .retain(|d, _| keep(d));
    }

    /// The component of degree `d`, computing any missing lower components.
    pub fn component(&self, d: TriDegree) -> Arc<ComponentNf<T>> {
        if let Some(c) = self.cached(d) {
            return c;
        }
        let built = Arc::new(self.build(d));
        self.components
            .write()
            .expect("engine lock poisoned")
            .entry(d)
            .or_insert(built)
            .clone()
    }

    fn lower(&self, d: TriDegree, v: Var) -> Option<Arc<ComponentNf<T>>> {
        d.checked_sub(&v.degree()).map(|e| self.component(e))
    }

    fn build(&self, d: TriDegree) -> ComponentNf<T> {
        let n = self.n;
        let monomials = enumerate_monomials(n, d);
        let index: HashMap<SuperMonomial, u32> = monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i as u32))
            .collect();
        let len = monomials.len();
        if d == TriDegree::default() || len == 0 {
            return ComponentNf {
                degree: d,
                standard: (0..len as u32).collect(),
                is_standard: vec![true; len],
                nf: (0..len).map(SparseVec::unit).collect(),
                monomials,
                index,
            };
        }

        let commuting: Vec<(Var, Arc<ComponentNf<T>>)> = (0..n)
            .filter_map(|i| self.lower(d, Var::X(i)).map(|c| (Var::X(i), c)))
            .chain((0..n).filter_map(|i| self.lower(d, Var::Y(i)).map(|c| (Var::Y(i), c))))
            .collect();

        // rewrite every monomial into the candidate set U, in increasing order
        let mut rho: Vec<SparseVec<T>> = Vec::with_capacity(len);
        let mut chosen: Vec<Option<Var>> = Vec::with_capacity(len);
        let mut candidates: Vec<u32> = Vec::new();
        for m in &monomials {
            let hit = commuting.iter().find_map(|(v, low)| {
                let p = m.div_commuting(*v)?;
                let pi = low.index_of(&p)?;
                (!low.is_standard[pi]).then_some((*v, low, pi))
            });
            match hit {
                Some((v, low, pi)) => {
                    let mut acc = SparseVec::new();
                    for (pos, c) in low.nf[pi].entries() {
                        let (_, vm) = low.standard_monomial(*pos).mul_var(v).expect("commuting");
                        let j = index[&vm] as usize;
                        debug_assert!(j < rho.len(), "normal form is not order-decreasing");
                        acc.axpy(c, &rho[j]);
                    }
                    rho.push(acc);
                    chosen.push(Some(v));
                }
                None => {
                    rho.push(SparseVec::unit(candidates.len()));
                    candidates.push(rho.len() as u32 - 1);
                    chosen.push(None);
                }
            }
        }

        let u = candidates.len();
        // columns in decreasing monomial order so pivots are leading monomials
        let to_col = |v: &SparseVec<T>| v.map_indices(|p| u - 1 - p);
        let mut eb = EchelonBuilder::new(u);
        if u > 0 {
            'relations: {
                for (v, low) in &commuting {
                    for pi in low.leading() {
                        let (_, m) = low.monomials[pi].mul_var(*v).expect("commuting");
                        let mi = index[&m] as usize;
                        if chosen[mi] == Some(*v) {
                            continue;
                        }
                        let mut rel = rho[mi].clone();
                        for (pos, c) in low.nf[pi].entries() {
                            let (_, vm) = low.standard_monomial(*pos).mul_var(*v).expect("commuting");
                            rel.axpy(&(-c.clone()), &rho[index[&vm] as usize]);
                        }
                        eb.push(to_col(&rel));
                        if eb.is_full() {
                            break 'relations;
                        }
                    }
                }
                for i in 0..n {
                    let v = Var::Theta(i);
                    let Some(low) = self.lower(d, v) else { break };
                    for pi in low.leading() {
                        let mut rel = SparseVec::new();
                        if let Some((s, m)) = low.monomials[pi].mul_var(v) {
                            rel.axpy(&T::from_int(s), &rho[index[&m] as usize]);
                        }
                        for (pos, c) in low.nf[pi].entries() {
                            if let Some((s, m)) = low.standard_monomial(*pos).mul_var(v) {
                                rel.axpy(&(-(c.clone() * T::from_int(s))), &rho[index[&m] as usize]);
                            }
                        }
                        eb.push(to_col(&rel));
                        if eb.is_full() {
                            break 'relations;
                        }
                    }
                }
                for g in self.generators.iter().filter(|g| g.degree == d) {
                    let mut rel = SparseVec::new();
                    for (m, c) in g.poly.terms() {
                        rel.axpy(c, &rho[index[m] as usize]);
                    }
                    eb.push(to_col(&rel));
                }
            }
        }

        let rref = eb.into_rref();
        let mut standard = Vec::new();
        let mut std_pos: HashMap<usize, usize> = HashMap::new();
        for (p, &mi) in candidates.iter().enumerate() {
            if !rref.is_pivot(u - 1 - p) {
                std_pos.insert(u - 1 - p, standard.len());
                standard.push(mi);
            }
        }
        let mut is_standard = vec![false; len];
        for &mi in &standard {
            is_standard[mi as usize] = true;
        }
        let nf = rho
            .iter()
            .map(|r| {
                if standard.is_empty() {
                    return SparseVec::new();
                }
                rref.reduce(&to_col(r)).map_indices(|col| std_pos[&col])
            })
            .collect();
        ComponentNf {
            degree: d,
            monomials,
            index,
            standard,
            is_standard,
            nf,
        }
    }
}
