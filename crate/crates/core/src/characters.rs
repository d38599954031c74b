//! Formal characters in `Z[X]`, Weyl characters via Freudenthal's recursion,
//! the Weyl dimension formula, and Brauer–Klimyk tensor decomposition.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::rootdata::{RootSystem, SignedDominant, Weight};

/// A finite integer combination of formal exponentials `e^lambda`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FormalCharacter {
    terms: BTreeMap<Weight, i64>,
}

impl FormalCharacter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(w: Weight) -> Self {
        let mut c = Self::new();
        c.add_term(w, 1);
        c
    }

    pub fn add_term(&mut self, w: Weight, m: i64) {
        if m == 0 {
            return;
        }
        match self.terms.entry(w) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += m;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(m);
            }
        }
    }

    pub fn multiplicity(&self, w: &Weight) -> i64 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, i64)> {
        self.terms.iter().map(|(w, &m)| (w, m))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of multiplicities (the dimension, for a module character).
    pub fn total(&self) -> i64 {
        self.terms.values().sum()
    }

    /// Product in `Z[X]`.
    pub fn product(&self, other: &FormalCharacter) -> FormalCharacter {
        let mut acc: BTreeMap<Weight, i64> = BTreeMap::new();
        for (a, &m) in &self.terms {
            for (b, &n) in &other.terms {
                *acc.entry(a + b).or_insert(0) += m * n;
            }
        }
        acc.retain(|_, v| *v != 0);
        FormalCharacter { terms: acc }
    }

    pub fn is_weyl_invariant(&self, rs: &RootSystem) -> bool {
        (0..rs.rank()).all(|i| self.terms.iter().all(|(w, &m)| self.multiplicity(&rs.reflect_simple(i, w)) == m))
    }
}

impl FromIterator<(Weight, i64)> for FormalCharacter {
    fn from_iter<I: IntoIterator<Item = (Weight, i64)>>(iter: I) -> Self {
        let mut terms = BTreeMap::new();
        for (w, m) in iter {
            *terms.entry(w).or_insert(0) += m;
        }
        terms.retain(|_, v: &mut i64| *v != 0);
        FormalCharacter { terms }
    }
}

/// Multiset of dominant weights, e.g. the Weyl factors of a filtration.
pub type WeylMultiset = BTreeMap<Weight, i64>;

/// Character computations for one root system, with an in-memory table of
/// Weyl characters shared by all callers.
#[derive(Debug)]
pub struct Characters {
    rs: Arc<RootSystem>,
    cache: RwLock<HashMap<Weight, Arc<FormalCharacter>>>,
}

impl Characters {
    pub fn new(rs: Arc<RootSystem>) -> Self {
        Characters { rs, cache: RwLock::new(HashMap::new()) }
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    /// Weight multiplicities of the Weyl module `V(lambda)`.
    pub fn weight_multiplicities(&self, lambda: &Weight) -> Result<Arc<FormalCharacter>> {
        if !lambda.is_dominant() {
            return Err(Error::NotDominant(lambda.to_string()));
        }
        if let Some(c) = self.cache.read().unwrap().get(lambda) {
            return Ok(c.clone());
        }
        let dominant = self.dominant_multiplicities(lambda)?;
        let mut full = FormalCharacter::new();
        for (mu, m) in &dominant {
            for w in self.rs.weyl_orbit(mu) {
                full.add_term(w, *m);
            }
        }
        let full = Arc::new(full);
        self.cache.write().unwrap().entry(lambda.clone()).or_insert_with(|| full.clone());
        Ok(full)
    }

    /// Freudenthal's recursion restricted to dominant weights.
    pub fn dominant_multiplicities(&self, lambda: &Weight) -> Result<BTreeMap<Weight, i64>> {
        let rs = &*self.rs;
        let r = rs.rank();
        // Dominant weights below lambda, reached by subtracting positive roots.
        let mut depth: HashMap<Weight, Vec<i64>> = HashMap::new();
        depth.insert(lambda.clone(), vec![0; r]);
        let mut stack = vec![lambda.clone()];
        while let Some(nu) = stack.pop() {
            let d = depth[&nu].clone();
            for (k, beta) in rs.positive_roots_wt().iter().enumerate() {
                let next = &nu - beta;
                if next.is_dominant() && !depth.contains_key(&next) {
                    let nd: Vec<i64> = d.iter().zip(&rs.positive_roots()[k]).map(|(a, b)| a + b).collect();
                    depth.insert(next.clone(), nd);
                    stack.push(next);
                }
            }
        }
        let mut order: Vec<(&Weight, &Vec<i64>)> = depth.iter().collect();
        order.sort_by(|a, b| (a.1.iter().sum::<i64>(), a.0).cmp(&(b.1.iter().sum::<i64>(), b.0)));

        let lr = lambda + rs.rho();
        let mut mult: HashMap<Weight, i64> = HashMap::new();
        for (nu, beta) in order {
            if nu == lambda {
                mult.insert(nu.clone(), 1);
                continue;
            }
            let mut sum = 0i64;
            for (k, alpha) in rs.positive_roots_wt().iter().enumerate() {
                let alpha_root = &rs.positive_roots()[k];
                let mut step = nu + alpha;
                loop {
                    let (dom, _) = rs.to_dominant(&step);
                    let Some(&m) = mult.get(&dom) else { break };
                    sum += m * rs.form_weight_root(&step, alpha_root);
                    step += alpha;
                }
            }
            let denom = 2 * rs.form_weight_root(&lr, beta) - rs.form_root_root(beta);
            if denom <= 0 || (2 * sum) % denom != 0 {
                return Err(Error::Invariant(format!(
                    "Freudenthal step at {nu} for V{lambda}: 2*{sum}/{denom} is not a nonnegative integer"
                )));
            }
            let m = 2 * sum / denom;
            if m > 0 {
                mult.insert(nu.clone(), m);
            }
        }
        Ok(mult.into_iter().collect())
    }

    /// Weyl dimension formula, evaluated exactly.
    pub fn weyl_dim(&self, lambda: &Weight) -> Result<i64> {
        if !lambda.is_dominant() {
            return Err(Error::NotDominant(lambda.to_string()));
        }
        let rs = &*self.rs;
        let lr = lambda + rs.rho();
        let mut num = BigInt::from(1);
        let mut den = BigInt::from(1);
        for k in 0..rs.positive_roots().len() {
            num *= rs.pairing_coroot(&lr, k);
            den *= rs.pairing_coroot(rs.rho(), k);
        }
        if !(&num % &den).is_zero() {
            return Err(Error::Invariant(format!("Weyl dimension of {lambda} is not integral")));
        }
        (num / den).to_i64().ok_or_else(|| Error::Invariant(format!("dimension of V{lambda} overflows")))
    }

    /// Signed dominant normal form of the symbol `ch(lambda)`.
    pub fn ch_point(&self, lambda: &Weight) -> SignedDominant {
        self.rs.dominant_rep_signed(lambda)
    }

    /// Weyl factors of `V(lambda) (x) V(mu)` by the Brauer–Klimyk rule.
    pub fn tensor_weyl_factors(&self, lambda: &Weight, mu: &Weight) -> Result<WeylMultiset> {
        let dl = self.weyl_dim(lambda)?;
        let dm = self.weyl_dim(mu)?;
        // Iterate over the weights of the smaller factor; the result is symmetric.
        let (base, other) = if dm <= dl { (lambda, mu) } else { (mu, lambda) };
        let weights = self.weight_multiplicities(other)?;
        let mut acc: WeylMultiset = BTreeMap::new();
        for (omega, c) in weights.iter() {
            if let SignedDominant::Signed { sign, weight } = self.ch_point(&(base + omega)) {
                *acc.entry(weight).or_insert(0) += sign * c;
            }
        }
        if let Some((w, m)) = acc.iter().find(|(_, &m)| m < 0) {
            return Err(Error::Invariant(format!(
                "Brauer-Klimyk produced multiplicity {m} at {w} for V{lambda} (x) V{mu}"
            )));
        }
        acc.retain(|_, m| *m != 0);
        let mut total = 0i64;
        for (nu, m) in &acc {
            total += m * self.weyl_dim(nu)?;
        }
        if total != dl * dm {
            return Err(Error::Invariant(format!(
                "dimension not conserved in V{lambda} (x) V{mu}: {total} != {dl}*{dm}"
            )));
        }
        Ok(acc)
    }
}
