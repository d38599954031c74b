//! Characters of indecomposable tilting modules at a root of unity, their
//! tensor products and decompositions, the maps to `N^1`, tensor-ideal
//! membership through cells, and quotient Grothendieck rings.
//!
//! Regular blocks come straight from the KL basis: `Q(x.0)` has Weyl factors
//! `V(y.0)` with multiplicity `n_{y,x}(1)`. A singular `Q(w.lambda_0)` is
//! obtained by translating `Q(w'.0)` onto the wall, where `w'` is the longest
//! element of `w Stab(lambda_0)`, and dividing by the top multiplicity.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::affine::{AffineElement, AffineGroup, Region, WfRep};
use crate::cells::CellIdeal;
use crate::characters::{Characters, FormalCharacter, WeylMultiset};
use crate::error::{Error, Result};
use crate::hecke::{KlBasis, N1Vector};
use crate::rootdata::{RootSystem, Weight};

/// Weyl-filtration content of a tilting module in one block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TiltingCharacter {
    pub block: Weight,
    factors: WeylMultiset,
}

impl TiltingCharacter {
    pub fn new(block: Weight) -> Self {
        TiltingCharacter { block, factors: BTreeMap::new() }
    }

    pub fn from_factors(block: Weight, factors: impl IntoIterator<Item = (Weight, i64)>) -> Self {
        let mut t = TiltingCharacter::new(block);
        for (w, m) in factors {
            t.add(w, m);
        }
        t
    }

    pub fn add(&mut self, nu: Weight, m: i64) {
        if m == 0 {
            return;
        }
        let slot = self.factors.entry(nu.clone()).or_insert(0);
        *slot += m;
        if *slot == 0 {
            self.factors.remove(&nu);
        }
    }

    pub fn multiplicity(&self, nu: &Weight) -> i64 {
        self.factors.get(nu).copied().unwrap_or(0)
    }

    pub fn factors(&self) -> &WeylMultiset {
        &self.factors
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// The factor that comes first in peeling order.
    pub fn top(&self, rs: &RootSystem) -> Option<(Weight, i64)> {
        self.factors.iter().max_by_key(|(w, _)| peel_key(rs, w)).map(|(w, &m)| (w.clone(), m))
    }

    /// Factors in peeling order, highest first.
    pub fn sorted_factors(&self, rs: &RootSystem) -> Vec<(Weight, i64)> {
        let mut v: Vec<(Weight, i64)> = self.factors.iter().map(|(w, &m)| (w.clone(), m)).collect();
        v.sort_by_key(|(w, _)| std::cmp::Reverse(peel_key(rs, w)));
        v
    }

    pub fn to_json(&self, rs: &RootSystem) -> serde_json::Value {
        let factors: Vec<_> = self
            .sorted_factors(rs)
            .into_iter()
            .map(|(w, m)| serde_json::json!({"weight": w, "multiplicity": m}))
            .collect();
        serde_json::json!({"block": self.block, "factors": factors})
    }
}

/// Dominance-compatible order: height `<nu, 2 rho^vee>`, then coordinates.
pub fn peel_key(rs: &RootSystem, nu: &Weight) -> (i64, Weight) {
    (rs.height(nu), nu.clone())
}

/// Quotient of the split Grothendieck ring by a tensor ideal.
#[derive(Clone, Debug)]
pub struct QuotientRing {
    pub basis: Vec<Weight>,
    pub unit: usize,
    /// `table[i][j][k] = c^k_{ij}`, zeros omitted.
    pub table: Vec<Vec<BTreeMap<usize, i64>>>,
    pub length: usize,
    pub cell: usize,
}

impl QuotientRing {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn index_of(&self, w: &Weight) -> Option<usize> {
        self.basis.iter().position(|b| b == w)
    }

    /// `b_i b_j` as a dense coefficient vector.
    pub fn product_basis(&self, i: usize, j: usize) -> Vec<i64> {
        let mut v = vec![0; self.dim()];
        for (&k, &c) in &self.table[i][j] {
            v[k] = c;
        }
        v
    }

    pub fn multiply(&self, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); self.dim()];
        for (i, ai) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, bj) in b.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                let ab = ai * bj;
                for (&k, &c) in &self.table[i][j] {
                    out[k] += &ab * c;
                }
            }
        }
        out
    }

    fn unit_vector(&self, i: usize) -> Vec<BigInt> {
        (0..self.dim()).map(|k| if k == i { BigInt::one() } else { BigInt::zero() }).collect()
    }

    /// Commutativity, unit law, nonnegativity and associativity on
    /// `samples` seeded random triples.
    pub fn check_axioms(&self, samples: usize, seed: u64) -> Result<()> {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                if self.table[i][j] != self.table[j][i] {
                    return Err(Error::Invariant(format!("structure constants not commutative at ({i}, {j})")));
                }
                if self.table[i][j].values().any(|&c| c < 0) {
                    return Err(Error::Invariant(format!("negative structure constant at ({i}, {j})")));
                }
            }
            let expect = BTreeMap::from([(i, 1)]);
            if self.table[self.unit][i] != expect {
                return Err(Error::Invariant(format!("unit law fails for basis element {i}")));
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..samples {
            let (i, j, k) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
            let (bi, bj, bk) = (self.unit_vector(i), self.unit_vector(j), self.unit_vector(k));
            let left = self.multiply(&self.multiply(&bi, &bj), &bk);
            let right = self.multiply(&bi, &self.multiply(&bj, &bk));
            if left != right {
                return Err(Error::Invariant(format!("associativity fails on ({i}, {j}, {k})")));
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut entries = Vec::new();
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                for (&k, &c) in &self.table[i][j] {
                    entries.push(serde_json::json!([i, j, k, c]));
                }
            }
        }
        serde_json::json!({
            "dimension": self.dim(),
            "basis": self.basis,
            "unit": self.unit,
            "structure_constants": entries,
            "truncation": self.length,
        })
    }

    /// Rows `i,j,k,coefficient` in index order.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("i,j,k,coefficient\n");
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                for (&k, &c) in &self.table[i][j] {
                    s.push_str(&format!("{i},{j},{k},{c}\n"));
                }
            }
        }
        s
    }
}

/// Radical of a quotient ring with a nilpotency certificate per basis vector.
#[derive(Clone, Debug)]
pub struct Radical {
    pub dim: usize,
    pub trace_form_rank: usize,
    /// Primitive integer vectors in the ring basis.
    pub basis: Vec<Vec<BigInt>>,
    /// Smallest `p` with `z^p = 0`, per basis vector.
    pub nilpotency_index: Vec<usize>,
}

impl Radical {
    /// Integers are written as decimal strings to stay exact.
    pub fn to_json(&self) -> serde_json::Value {
        let basis: Vec<Vec<String>> = self.basis.iter().map(|v| v.iter().map(|c| c.to_string()).collect()).collect();
        serde_json::json!({
            "radical_dimension": self.dim,
            "trace_form_rank": self.trace_form_rank,
            "radical_basis": basis,
            "nilpotency_index": self.nilpotency_index,
        })
    }
}

/// Tilting characters for one root system and level.
#[derive(Debug)]
pub struct Tilting {
    group: Arc<AffineGroup>,
    kl: Arc<KlBasis>,
    chars: Arc<Characters>,
    q_cache: RwLock<HashMap<Weight, Arc<TiltingCharacter>>>,
}

impl Tilting {
    pub fn new(kl: Arc<KlBasis>) -> Self {
        let group = kl.group_arc().clone();
        let chars = Arc::new(Characters::new(group.root_system_arc().clone()));
        Tilting { group, kl, chars, q_cache: RwLock::new(HashMap::new()) }
    }

    pub fn group(&self) -> &AffineGroup {
        &self.group
    }

    pub fn kl(&self) -> &KlBasis {
        &self.kl
    }

    pub fn characters(&self) -> &Characters {
        &self.chars
    }

    fn rs(&self) -> &RootSystem {
        self.group.root_system()
    }

    /// The point of the closed fundamental alcove linked to `nu`.
    pub fn block_of(&self, nu: &Weight) -> Result<Weight> {
        Ok(self.group.reduce_to_alcove(nu)?.1)
    }

    /// `Q(x.0)` from `Nbar^1_x`.
    pub fn tilting_regular(&self, x: &WfRep) -> Result<TiltingCharacter> {
        let zero = Weight::zero(self.rs().rank());
        let n1 = self.kl.kl_element_v1(x)?;
        let mut t = TiltingCharacter::new(zero.clone());
        for (y, c) in n1.iter() {
            if c <= 0 {
                return Err(Error::Invariant(format!("KL value n_({y},{x})(1) = {c} is not positive")));
            }
            t.add(self.group.dot_act(y.element(), &zero), c);
        }
        Ok(t)
    }

    /// Factorwise `V(y.0) -> V(y.lambda_0)`; factors landing on a reflecting
    /// hyperplane vanish.
    pub fn translate_regular_to_wall(&self, t: &TiltingCharacter, lambda0: &Weight) -> Result<TiltingCharacter> {
        if !t.block.is_zero() {
            return Err(Error::InvalidArgument(format!("translation starts in block {}, expected 0", t.block)));
        }
        if !self.group.in_closed_alcove(lambda0) {
            return Err(Error::NotInAlcove(lambda0.to_string()));
        }
        let mut out = TiltingCharacter::new(lambda0.clone());
        for (nu, &m) in t.factors() {
            let (y, _) = self.group.resolve_dominant(nu)?;
            let image = self.group.dot_act(y.element(), lambda0);
            if image.is_dominant() {
                out.add(image, m);
            }
        }
        Ok(out)
    }

    /// Factorwise `V(w.lambda_0) -> sum_{x in Stab} V(wx.0)`.
    pub fn translate_wall_to_regular(&self, t: &TiltingCharacter) -> Result<TiltingCharacter> {
        let stab = self.group.stabilizer(&t.block)?;
        let zero = Weight::zero(self.rs().rank());
        let mut out = TiltingCharacter::new(zero.clone());
        for (nu, &m) in t.factors() {
            let (w, l0) = self.group.resolve_dominant(nu)?;
            if l0 != t.block {
                return Err(Error::Invariant(format!("factor {nu} is not in block {}", t.block)));
            }
            for y in &stab {
                let x = self.group.compose(w.element(), y);
                out.add(self.group.dot_act(&x, &zero), m);
            }
        }
        Ok(out)
    }

    /// `w'`: the longest element of the coset of `mu` in `W^f`.
    pub fn longest_representative(&self, mu: &Weight) -> Result<WfRep> {
        let (w, l0) = self.group.resolve_dominant(mu)?;
        let stab = self.group.stabilizer(&l0)?;
        let ext = self.group.coset_extremes(&w, &stab)?;
        if !ext.full_coset_in_wf {
            return Err(Error::Invariant(format!("coset of dominant weight {mu} leaves W^f")));
        }
        Ok(ext.long)
    }

    /// Weyl factors of the indecomposable tilting module `Q(mu)`.
    pub fn tilting_indecomposable(&self, mu: &Weight) -> Result<Arc<TiltingCharacter>> {
        if let Some(t) = self.q_cache.read().unwrap().get(mu) {
            return Ok(t.clone());
        }
        let (w, l0) = self.group.resolve_dominant(mu)?;
        let stab = self.group.stabilizer(&l0)?;
        let q = if stab.len() == 1 {
            self.translate_regular_to_wall(&self.tilting_regular(&w)?, &l0)?
        } else {
            self.singular_indecomposable(mu, &w, &l0, &stab)?
        };
        let q = Arc::new(q);
        self.q_cache.write().unwrap().insert(mu.clone(), q.clone());
        Ok(q)
    }

    fn singular_indecomposable(
        &self,
        mu: &Weight,
        w: &WfRep,
        l0: &Weight,
        stab: &[AffineElement],
    ) -> Result<TiltingCharacter> {
        let bad = |detail: String| Error::SingularCharacter { weight: mu.to_string(), detail };
        let ext = self.group.coset_extremes(w, stab)?;
        if !ext.full_coset_in_wf {
            return Err(bad("longest coset element escapes W^f".into()));
        }
        let c = self.translate_regular_to_wall(&self.tilting_regular(&ext.long)?, l0)?;
        let (top, k) = c.top(self.rs()).ok_or_else(|| bad("translated character is empty".into()))?;
        if &top != mu {
            return Err(bad(format!("translated character has top factor {top}")));
        }
        if k != stab.len() as i64 {
            return Err(bad(format!("top multiplicity {k} differs from |Stab| = {}", stab.len())));
        }
        if let Some((nu, m)) = c.factors().iter().find(|(_, &m)| m % k != 0) {
            return Err(bad(format!("multiplicity {m} of {nu} is not divisible by {k}")));
        }
        let q = TiltingCharacter::from_factors(l0.clone(), c.factors().iter().map(|(nu, &m)| (nu.clone(), m / k)));
        // Re-decompose the translate with Q(mu) in place: it must be k copies.
        self.q_cache.write().unwrap().insert(mu.clone(), Arc::new(q.clone()));
        let check = self.peel_decompose(&c);
        let expect = BTreeMap::from([(mu.clone(), k)]);
        match check {
            Ok(d) if d == expect => Ok(q),
            Ok(d) => {
                self.q_cache.write().unwrap().remove(mu);
                Err(bad(format!("translate decomposes as {d:?}")))
            }
            Err(e) => {
                self.q_cache.write().unwrap().remove(mu);
                Err(bad(format!("translate does not decompose: {e}")))
            }
        }
    }

    /// Decomposition into indecomposable tiltings by triangular elimination.
    pub fn peel_decompose(&self, t: &TiltingCharacter) -> Result<WeylMultiset> {
        let rs = self.rs();
        let mut rest = t.clone();
        let mut out = BTreeMap::new();
        while let Some((nu, k)) = rest.top(rs) {
            if k < 0 {
                return Err(Error::NotTilting(format!("multiplicity {k} at {nu}")));
            }
            let q = self.tilting_indecomposable(&nu)?;
            for (x, &m) in q.factors() {
                rest.add(x.clone(), -k * m);
            }
            if let Some((x, m)) = rest.factors().iter().find(|(_, &m)| m < 0) {
                return Err(Error::NotTilting(format!("peeling {k} Q{nu} leaves multiplicity {m} at {x}")));
            }
            out.insert(nu, k);
        }
        Ok(out)
    }

    /// Weyl factors of `T1 (x) T2`, split by block and sorted by block.
    pub fn tensor_product(&self, t1: &TiltingCharacter, t2: &TiltingCharacter) -> Result<Vec<TiltingCharacter>> {
        let mut total: WeylMultiset = BTreeMap::new();
        for (a, &m) in t1.factors() {
            for (b, &n) in t2.factors() {
                for (nu, c) in self.chars.tensor_weyl_factors(a, b)? {
                    *total.entry(nu).or_insert(0) += m * n * c;
                }
            }
        }
        let mut blocks: BTreeMap<Weight, TiltingCharacter> = BTreeMap::new();
        for (nu, c) in total {
            let b = self.block_of(&nu)?;
            blocks.entry(b.clone()).or_insert_with(|| TiltingCharacter::new(b)).add(nu, c);
        }
        Ok(blocks.into_values().collect())
    }

    /// Indecomposable summands of `Q(lambda) (x) Q(mu)`.
    pub fn decompose_tensor(&self, lambda: &Weight, mu: &Weight) -> Result<WeylMultiset> {
        let a = self.tilting_indecomposable(lambda)?;
        let b = self.tilting_indecomposable(mu)?;
        let mut out = BTreeMap::new();
        for block in self.tensor_product(&a, &b)? {
            for (nu, k) in self.peel_decompose(&block)? {
                *out.entry(nu).or_insert(0) += k;
            }
        }
        Ok(out)
    }

    /// Sum of Weyl dimensions of the factors.
    pub fn dimension(&self, t: &TiltingCharacter) -> Result<i64> {
        let mut d = 0;
        for (nu, &m) in t.factors() {
            d += m * self.chars.weyl_dim(nu)?;
        }
        Ok(d)
    }

    /// `alpha`: each factor `V(nu)` goes to the sum of `(-1)^l(u) N^1_x''`
    /// over `x = u x''` with `x.lambda_0 = nu`.
    pub fn alpha_map(&self, t: &TiltingCharacter) -> Result<N1Vector> {
        let g = &*self.group;
        let stab = g.stabilizer(&t.block)?;
        let wf = self.rs().weyl();
        let mut out = N1Vector::zero();
        for (nu, &m) in t.factors() {
            let (w, l0) = g.reduce_to_alcove(nu)?;
            if l0 != t.block {
                return Err(Error::Invariant(format!("factor {nu} is not in block {}", t.block)));
            }
            for y in &stab {
                let x = g.compose(&w, y);
                let (u, rest) = g.split_wf(&x);
                out.add(g.rep_unchecked(&rest), m * wf.sign(u));
            }
        }
        Ok(out)
    }

    /// The element `c(M)` with `alpha_mu(V (x) M) = alpha_lambda(V) c(M)`:
    /// all `x` with `x.mu_0 = lambda_0 + omega`, `omega` a weight of `M`,
    /// one representative per orbit of left multiplication by
    /// `Stab(lambda_0)`.
    pub fn c_element(
        &self,
        weights: &FormalCharacter,
        lambda0: &Weight,
        mu0: &Weight,
    ) -> Result<BTreeMap<AffineElement, i64>> {
        let g = &*self.group;
        if !weights.is_weyl_invariant(self.rs()) {
            return Err(Error::InvalidArgument("weights must be invariant under the finite Weyl group".into()));
        }
        let stab_l = g.stabilizer(lambda0)?;
        let stab_m = g.stabilizer(mu0)?;
        let mut multiset: BTreeMap<AffineElement, i64> = BTreeMap::new();
        for (omega, m) in weights.iter() {
            let (h, p) = g.reduce_to_alcove(&(lambda0 + omega))?;
            if &p != mu0 {
                continue;
            }
            for y in &stab_m {
                *multiset.entry(g.compose(&h, y)).or_insert(0) += m;
            }
        }
        let mut out = BTreeMap::new();
        for (x, &m) in &multiset {
            let orbit: Vec<AffineElement> = stab_l.iter().map(|z| g.compose(z, x)).collect();
            if orbit.iter().any(|z| multiset.get(z) != Some(&m)) {
                return Err(Error::Invariant("weight multiset is not stable under the stabilizer".into()));
            }
            if orbit.iter().min() == Some(x) {
                out.insert(x.clone(), m);
            }
        }
        Ok(out)
    }

    /// `Q(mu)` lies in the ideal spanned by the `Q(w.lambda)` with `w` in it.
    pub fn ideal_membership(&self, mu: &Weight, ideal: &CellIdeal) -> Result<bool> {
        let w = self.longest_representative(mu)?;
        ideal.contains(&self.kl, &w)
    }

    /// Dominant weights whose indecomposable survives the quotient.
    pub fn survivors(&self, ideal: &CellIdeal) -> Result<Vec<Weight>> {
        let complement = ideal.complement_in_ball();
        if complement.iter().any(|x| x.length() + 2 > ideal.length()) {
            return Err(Error::InfiniteQuotient { cell: ideal.cell().to_string() });
        }
        let rs = self.rs();
        let mut out = Vec::new();
        for mu in self.group.enumerate_dominant_in_region(&complement, Region::Closed) {
            if !self.ideal_membership(&mu, ideal)? {
                out.push(mu);
            }
        }
        out.sort_by_key(|w| peel_key(rs, w));
        Ok(out)
    }

    /// The quotient of the tilting Grothendieck ring by the ideal.
    pub fn quotient_ring(&self, ideal: &CellIdeal) -> Result<QuotientRing> {
        let basis = self.survivors(ideal)?;
        let zero = Weight::zero(self.rs().rank());
        let unit = basis
            .iter()
            .position(|b| *b == zero)
            .ok_or_else(|| Error::InvalidArgument("the ideal contains the unit object".into()))?;
        let index: HashMap<&Weight, usize> = basis.iter().enumerate().map(|(i, b)| (b, i)).collect();
        let n = basis.len();
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
        let rows: Vec<Result<BTreeMap<usize, i64>>> = pairs
            .par_iter()
            .map(|&(i, j)| {
                let mut row = BTreeMap::new();
                for (nu, k) in self.decompose_tensor(&basis[i], &basis[j])? {
                    match index.get(&nu) {
                        Some(&t) => {
                            row.insert(t, k);
                        }
                        None => {
                            if !self.ideal_membership(&nu, ideal)? {
                                return Err(Error::Invariant(format!(
                                    "summand {nu} of Q{} (x) Q{} is neither a survivor nor an ideal member",
                                    basis[i], basis[j]
                                )));
                            }
                        }
                    }
                }
                Ok(row)
            })
            .collect();
        let mut table = vec![vec![BTreeMap::new(); n]; n];
        for (&(i, j), row) in pairs.iter().zip(rows) {
            table[i][j] = row?;
        }
        let ring = QuotientRing { basis, unit, table, length: ideal.length(), cell: ideal.cell() };
        ring.check_axioms(50, 0x5eed)?;
        Ok(ring)
    }

    /// Every summand of `Q(mu) (x) Q(omega_i)` for ideal members `mu` in
    /// `weights` is again a member; returns the violations.
    pub fn closure_violations(&self, ideal: &CellIdeal, weights: &[Weight]) -> Result<Vec<(Weight, Weight, Weight)>> {
        let r = self.rs().rank();
        let mut bad = Vec::new();
        for mu in weights {
            if !self.ideal_membership(mu, ideal)? {
                continue;
            }
            for i in 0..r {
                let om = Weight::fundamental(r, i);
                for nu in self.decompose_tensor(mu, &om)?.into_keys() {
                    if !self.ideal_membership(&nu, ideal)? {
                        bad.push((mu.clone(), om.clone(), nu));
                    }
                }
            }
        }
        Ok(bad)
    }
}

/// Radical by the trace form `G_ij = Tr(L_{b_i b_j})`, with every kernel
/// vector certified nilpotent.
pub fn radical(ring: &QuotientRing) -> Result<Radical> {
    let n = ring.dim();
    let traces: Vec<i64> = (0..n).map(|k| (0..n).map(|m| ring.table[k][m].get(&m).copied().unwrap_or(0)).sum()).collect();
    let gram: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let s: i64 = ring.table[i][j].iter().map(|(&k, &c)| c * traces[k]).sum();
                    BigRational::from_integer(BigInt::from(s))
                })
                .collect()
        })
        .collect();
    let (rank, kernel) = kernel_basis(gram);
    let mut basis = Vec::new();
    let mut nilpotency_index = Vec::new();
    for z in kernel {
        let z = primitive_integer_vector(&z);
        let mut p = z.clone();
        let mut k = 1;
        while p.iter().any(|c| !c.is_zero()) {
            if k > n + 1 {
                return Err(Error::Invariant("trace-form kernel vector is not nilpotent".into()));
            }
            p = ring.multiply(&p, &z);
            k += 1;
        }
        basis.push(z);
        nilpotency_index.push(k);
    }
    Ok(Radical { dim: n - rank, trace_form_rank: rank, basis, nilpotency_index })
}

/// Rank and a kernel basis of a square rational matrix.
fn kernel_basis(mut a: Vec<Vec<BigRational>>) -> (usize, Vec<Vec<BigRational>>) {
    let n = a.len();
    let cols = if n == 0 { 0 } else { a[0].len() };
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..n).find(|&r| !a[r][col].is_zero()) else { continue };
        a.swap(row, p);
        let inv = a[row][col].recip();
        for c in 0..cols {
            a[row][c] = &a[row][c] * &inv;
        }
        for r in 0..n {
            if r != row && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in 0..cols {
                    let sub = &f * &a[row][c];
                    a[r][c] -= sub;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    let rank = pivots.len();
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let kernel = free
        .iter()
        .map(|&f| {
            let mut v = vec![BigRational::zero(); cols];
            v[f] = BigRational::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -a[r][f].clone();
            }
            v
        })
        .collect();
    (rank, kernel)
}

fn primitive_integer_vector(v: &[BigRational]) -> Vec<BigInt> {
    use num_integer::Integer;
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    let mut out: Vec<BigInt> = if g.is_zero() { ints } else { ints.iter().map(|x| x / &g).collect() };
    if out.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
        out = out.into_iter().map(|x| -x).collect();
    }
    out
}

/// Summary of a block partition of a multiset of dominant weights.
pub fn blocks_of(t: &Tilting, weights: &BTreeSet<Weight>) -> Result<BTreeMap<Weight, Vec<Weight>>> {
    let mut out: BTreeMap<Weight, Vec<Weight>> = BTreeMap::new();
    for w in weights {
        out.entry(t.block_of(w)?).or_default().push(w.clone());
    }
    Ok(out)
}
