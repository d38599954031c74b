//! The affine Weyl group `W = W_f ⋉ l·ZR` acting on weights through the
//! dot action, with alcove geometry, lengths, minimal coset representatives
//! `W^f` and stabilizers of points of the closed fundamental alcove.
//!
//! Elements are canonical pairs `(u, tau)` acting on `x = lambda + rho` by
//! `x ↦ u(x) + tau`; `tau` is stored in weight coordinates and always lies in
//! `l` times the root lattice. Generator `0` is the affine reflection `s_0`
//! in the wall `<x, theta_s^vee> = l`; generators `1..=rank` are the finite
//! simple reflections.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, RwLock};

use log::warn;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootdata::{RootSystem, Weight};

/// Element of the affine Weyl group as `(finite part, translation)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineElement {
    fin: usize,
    shift: Weight,
}

impl AffineElement {
    /// Index of the finite part in the materialized finite Weyl group.
    pub fn finite_part(&self) -> usize {
        self.fin
    }

    pub fn translation(&self) -> &Weight {
        &self.shift
    }
}

/// An element of `W^f` together with its lexicographically smallest reduced
/// word. Equality and ordering go through the word (length first).
#[derive(Clone, Debug)]
pub struct WfRep {
    elem: AffineElement,
    word: Arc<[u8]>,
}

impl WfRep {
    pub fn element(&self) -> &AffineElement {
        &self.elem
    }

    pub fn word(&self) -> &[u8] {
        &self.word
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    /// Compact form used in text output: generator digits, `e` for identity.
    pub fn word_string(&self) -> String {
        word_string(&self.word)
    }
}

pub fn word_string(word: &[u8]) -> String {
    if word.is_empty() {
        "e".to_string()
    } else {
        word.iter().map(|d| d.to_string()).collect()
    }
}

impl PartialEq for WfRep {
    fn eq(&self, other: &Self) -> bool {
        self.word == other.word
    }
}

impl Eq for WfRep {}

impl Hash for WfRep {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.word.hash(state)
    }
}

impl PartialOrd for WfRep {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for WfRep {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.word.len(), &*self.word).cmp(&(other.word.len(), &*other.word))
    }
}

impl fmt::Display for WfRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.word_string())
    }
}

/// Whether alcove membership includes walls.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Region {
    Closed,
    Interior,
}

/// Minimal and maximal elements of a coset `w Stab(lambda_0)` inside `W^f`.
#[derive(Clone, Debug)]
pub struct CosetExtremes {
    pub min: WfRep,
    pub long: WfRep,
    /// False if the longest element of the full coset is not in `W^f`.
    pub full_coset_in_wf: bool,
}

#[derive(Debug)]
pub struct AffineGroup {
    rs: Arc<RootSystem>,
    level: i64,
    s0: AffineElement,
    /// `u(rho)` for every finite element `u`.
    urho: Vec<Weight>,
    simple_idx: Vec<usize>,
    words: RwLock<HashMap<AffineElement, Arc<[u8]>>>,
}

impl AffineGroup {
    /// Builds `W` at level `l`; requires `l > h`.
    pub fn new(rs: Arc<RootSystem>, level: i64) -> Result<Self> {
        let h = rs.coxeter_number();
        if level <= h as i64 {
            return Err(Error::LevelTooSmall { level, coxeter: h });
        }
        if level % 2 == 0 {
            warn!("level l = {level} is even; the tilting picture assumes odd l");
        }
        if rs.label() == "G2" && level % 3 == 0 {
            warn!("level l = {level} is divisible by 3 for G2");
        }
        let wf = rs.weyl();
        let theta_k = rs.highest_short_root();
        let theta = rs.positive_roots_wt()[theta_k].clone();
        let r = rs.rank();
        // s_theta(x) = x - <x, theta^vee> theta
        let s_theta = wf
            .elements()
            .find(|&u| {
                (0..r).all(|j| {
                    let om = Weight::fundamental(r, j);
                    let img = &om - &(rs.pairing_coroot(&om, theta_k) * &theta);
                    wf.act(u, &om) == img
                })
            })
            .ok_or_else(|| Error::Invariant("reflection in the highest short root not found".into()))?;
        let s0 = AffineElement { fin: s_theta, shift: level * &theta };
        let urho = wf.elements().map(|u| wf.act(u, rs.rho())).collect();
        let simple_idx = (0..r)
            .map(|i| {
                rs.positive_roots()
                    .iter()
                    .position(|b| b.iter().enumerate().all(|(k, &c)| c == if k == i { 1 } else { 0 }))
                    .unwrap()
            })
            .collect();
        let g = AffineGroup { rs, level, s0, urho, simple_idx, words: RwLock::new(HashMap::new()) };
        if r <= 3 {
            g.verify_coxeter_relations()?;
        }
        Ok(g)
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn root_system_arc(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    pub fn level(&self) -> i64 {
        self.level
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    /// Number of generators, `rank + 1`.
    pub fn num_generators(&self) -> usize {
        self.rs.rank() + 1
    }

    pub fn identity(&self) -> AffineElement {
        AffineElement { fin: 0, shift: Weight::zero(self.rank()) }
    }

    pub fn generator(&self, s: usize) -> AffineElement {
        if s == 0 {
            self.s0.clone()
        } else {
            AffineElement { fin: self.rs.weyl().simple(s - 1), shift: Weight::zero(self.rank()) }
        }
    }

    /// A pure translation by `l * beta`, `beta` in simple-root coordinates.
    pub fn translation(&self, beta: &[i64]) -> AffineElement {
        AffineElement { fin: 0, shift: self.level * &self.rs.root_to_weight(beta) }
    }

    pub fn compose(&self, a: &AffineElement, b: &AffineElement) -> AffineElement {
        let wf = self.rs.weyl();
        AffineElement { fin: wf.compose(a.fin, b.fin), shift: &a.shift + &wf.act(a.fin, &b.shift) }
    }

    pub fn inverse(&self, a: &AffineElement) -> AffineElement {
        let wf = self.rs.weyl();
        let ui = wf.inverse(a.fin);
        AffineElement { fin: ui, shift: -&wf.act(ui, &a.shift) }
    }

    /// `w s`.
    pub fn mul_gen(&self, w: &AffineElement, s: usize) -> AffineElement {
        if s == 0 {
            self.compose(w, &self.s0)
        } else {
            AffineElement { fin: self.rs.weyl().mul_simple(w.fin, s - 1), shift: w.shift.clone() }
        }
    }

    /// `s w`.
    pub fn gen_mul(&self, s: usize, w: &AffineElement) -> AffineElement {
        if s == 0 {
            self.compose(&self.s0, w)
        } else {
            let wf = self.rs.weyl();
            AffineElement { fin: wf.simple_mul(s - 1, w.fin), shift: self.rs.reflect_simple(s - 1, &w.shift) }
        }
    }

    pub fn from_word(&self, word: &[u8]) -> AffineElement {
        word.iter().fold(self.identity(), |acc, &s| self.mul_gen(&acc, s as usize))
    }

    /// Linear action on `x` (already shifted by rho when used for the dot action).
    pub fn act(&self, w: &AffineElement, x: &Weight) -> Weight {
        &self.rs.weyl().act(w.fin, x) + &w.shift
    }

    /// `w . lambda = w(lambda + rho) - rho`.
    pub fn dot_act(&self, w: &AffineElement, lambda: &Weight) -> Weight {
        &self.act(w, &(lambda + self.rs.rho())) - self.rs.rho()
    }

    /// For each positive root, the index `k` of the strip
    /// `k l < <x, alpha^vee> < (k+1) l` containing the alcove `w A_0`.
    fn strip(&self, w: &AffineElement, k: usize) -> i64 {
        let rs = &*self.rs;
        let t = rs.pairing_coroot(&w.shift, k);
        debug_assert_eq!(t % self.level, 0);
        let t = t / self.level;
        if rs.pairing_coroot(&self.urho[w.fin], k) > 0 {
            t
        } else {
            t - 1
        }
    }

    /// Number of affine walls separating `A_0` from `w A_0`.
    pub fn length(&self, w: &AffineElement) -> usize {
        (0..self.rs.positive_roots().len()).map(|k| self.strip(w, k).unsigned_abs() as usize).sum()
    }

    pub fn right_descents(&self, w: &AffineElement) -> Vec<usize> {
        let n = self.length(w);
        (0..self.num_generators()).filter(|&s| self.length(&self.mul_gen(w, s)) < n).collect()
    }

    pub fn left_descents(&self, w: &AffineElement) -> Vec<usize> {
        let n = self.length(w);
        (0..self.num_generators()).filter(|&s| self.length(&self.gen_mul(s, w)) < n).collect()
    }

    pub fn length_and_descents(&self, w: &AffineElement) -> (usize, Vec<usize>) {
        (self.length(w), self.right_descents(w))
    }

    /// The alcove `w A_0` lies in the dominant cone.
    pub fn is_wf(&self, w: &AffineElement) -> bool {
        self.simple_idx.iter().all(|&k| self.strip(w, k) >= 0)
    }

    /// Lexicographically smallest reduced word.
    pub fn word(&self, w: &AffineElement) -> Arc<[u8]> {
        if let Some(word) = self.words.read().unwrap().get(w) {
            return word.clone();
        }
        let mut out = Vec::new();
        let mut cur = w.clone();
        let mut n = self.length(&cur);
        while n > 0 {
            let (s, next) = (0..self.num_generators())
                .map(|s| (s, self.gen_mul(s, &cur)))
                .find(|(_, x)| self.length(x) < n)
                .expect("nonidentity has a left descent");
            out.push(s as u8);
            cur = next;
            n -= 1;
        }
        let word: Arc<[u8]> = out.into();
        self.words.write().unwrap().insert(w.clone(), word.clone());
        word
    }

    pub fn wf_rep(&self, w: &AffineElement) -> Result<WfRep> {
        if !self.is_wf(w) {
            return Err(Error::NotMinimal(word_string(&self.word(w))));
        }
        Ok(WfRep { elem: w.clone(), word: self.word(w) })
    }

    pub(crate) fn rep_unchecked(&self, w: &AffineElement) -> WfRep {
        debug_assert!(self.is_wf(w));
        WfRep { elem: w.clone(), word: self.word(w) }
    }

    pub fn identity_rep(&self) -> WfRep {
        self.rep_unchecked(&self.identity())
    }

    /// Write `x = u x''` with `u` finite and `x''` in `W^f`.
    pub fn split_wf(&self, x: &AffineElement) -> (usize, AffineElement) {
        let rs = &*self.rs;
        let wf = rs.weyl();
        let h = rs.coxeter_number() as i64;
        // h * x(l rho / h), a generic interior point of the alcove x A_0.
        let mut q = &(self.level * &self.urho[x.fin]) + &(h * &x.shift);
        let mut u = wf.identity();
        while let Some(i) = (0..rs.rank()).find(|&i| q[i] < 0) {
            q = rs.reflect_simple(i, &q);
            u = wf.mul_simple(u, i);
        }
        let ui = wf.inverse(u);
        let rest = self.compose(&AffineElement { fin: ui, shift: Weight::zero(rs.rank()) }, x);
        (u, rest)
    }

    pub fn in_closed_alcove(&self, lambda: &Weight) -> bool {
        let x = lambda + self.rs.rho();
        x.coords().iter().all(|&c| c >= 0) && self.rs.pairing_highest(&x) <= self.level
    }

    /// Every weight of the closed fundamental alcove, i.e. every block.
    pub fn closed_alcove_points(&self) -> Vec<Weight> {
        let rs = &*self.rs;
        let r = rs.rank();
        let c = &rs.coroots()[rs.highest_short_root()];
        let mut out = Vec::new();
        let mut x = vec![0i64; r];
        'outer: loop {
            let used: i64 = x.iter().zip(c).map(|(a, b)| a * b).sum();
            if used <= self.level {
                out.push(&Weight::new(x.clone()) - rs.rho());
            }
            for i in 0..r {
                x[i] += 1;
                let used: i64 = x.iter().zip(c).map(|(a, b)| a * b).sum();
                if used <= self.level {
                    continue 'outer;
                }
                x[i] = 0;
            }
            break;
        }
        out.sort();
        out
    }

    /// Walk `lambda` into the closed fundamental alcove: returns `(g, lambda_0)`
    /// with `g . lambda_0 = lambda`.
    pub fn reduce_to_alcove(&self, lambda: &Weight) -> Result<(AffineElement, Weight)> {
        let rs = &*self.rs;
        let theta = &rs.positive_roots_wt()[rs.highest_short_root()];
        let mut x = lambda + rs.rho();
        let mut g = self.identity();
        let cap = 100_000;
        for _ in 0..cap {
            if let Some(i) = (0..rs.rank()).find(|&i| x[i] < 0) {
                x = rs.reflect_simple(i, &x);
                g = self.mul_gen(&g, i + 1);
                continue;
            }
            let top = rs.pairing_highest(&x);
            if top > self.level {
                x = &x - &((top - self.level) * theta);
                g = self.mul_gen(&g, 0);
                continue;
            }
            return Ok((g, &x - rs.rho()));
        }
        Err(Error::Invariant(format!("alcove walk from {lambda} did not terminate")))
    }

    /// `resolve_dominant(lambda) = (w, lambda_0)` with `w . lambda_0 = lambda`,
    /// `lambda_0` in the closed fundamental alcove and `w` the shortest element
    /// of `W^f` with that property.
    pub fn resolve_dominant(&self, lambda: &Weight) -> Result<(WfRep, Weight)> {
        if !lambda.is_dominant() {
            return Err(Error::NotDominant(lambda.to_string()));
        }
        let (g, l0) = self.reduce_to_alcove(lambda)?;
        let stab = self.stabilizer(&l0)?;
        let best = stab
            .iter()
            .map(|y| self.compose(&g, y))
            .filter(|x| self.is_wf(x))
            .min_by_key(|x| (self.length(x), x.clone()))
            .ok_or_else(|| Error::Invariant(format!("no coset element of {lambda} lies in W^f")))?;
        Ok((self.rep_unchecked(&best), l0))
    }

    /// Generators in `S` that dot-fix a point of the closed alcove.
    pub fn stabilizer_generators(&self, lambda0: &Weight) -> Result<Vec<usize>> {
        if !self.in_closed_alcove(lambda0) {
            return Err(Error::NotInAlcove(lambda0.to_string()));
        }
        let x = lambda0 + self.rs.rho();
        let mut gens = Vec::new();
        if self.rs.pairing_highest(&x) == self.level {
            gens.push(0);
        }
        for i in 0..self.rank() {
            if x[i] == 0 {
                gens.push(i + 1);
            }
        }
        Ok(gens)
    }

    /// The parabolic subgroup dot-fixing `lambda_0`, sorted by length.
    pub fn stabilizer(&self, lambda0: &Weight) -> Result<Vec<AffineElement>> {
        let gens = self.stabilizer_generators(lambda0)?;
        let mut seen = HashSet::from([self.identity()]);
        let mut out = vec![self.identity()];
        let mut k = 0;
        while k < out.len() {
            for &s in &gens {
                let n = self.mul_gen(&out[k], s);
                if seen.insert(n.clone()) {
                    out.push(n);
                }
            }
            k += 1;
        }
        out.sort_by_cached_key(|x| (self.length(x), x.clone()));
        Ok(out)
    }

    /// Shortest and longest elements of `w Stab` that lie in `W^f`.
    pub fn coset_extremes(&self, w: &WfRep, stab: &[AffineElement]) -> Result<CosetExtremes> {
        let coset: Vec<AffineElement> = stab.iter().map(|y| self.compose(&w.elem, y)).collect();
        let overall_max = coset.iter().max_by_key(|x| (self.length(x), (*x).clone())).unwrap().clone();
        let mut in_wf: Vec<AffineElement> = coset.into_iter().filter(|x| self.is_wf(x)).collect();
        in_wf.sort_by_cached_key(|x| (self.length(x), x.clone()));
        let (Some(min), Some(long)) = (in_wf.first(), in_wf.last()) else {
            return Err(Error::Invariant(format!("coset of {w} misses W^f")));
        };
        let full_coset_in_wf = self.is_wf(&overall_max);
        if !full_coset_in_wf {
            warn!("longest element of the coset of {w} escapes W^f");
        }
        Ok(CosetExtremes { min: self.rep_unchecked(min), long: self.rep_unchecked(long), full_coset_in_wf })
    }

    /// All `w` in `W^f` with `length(w) <= max_len`, sorted by (length, word).
    pub fn ball(&self, max_len: usize) -> Vec<WfRep> {
        let mut seen: HashSet<AffineElement> = HashSet::from([self.identity()]);
        let mut shell = vec![self.identity()];
        let mut all = vec![self.identity()];
        for n in 0..max_len {
            let mut next = Vec::new();
            for w in &shell {
                for s in 0..self.num_generators() {
                    let ws = self.mul_gen(w, s);
                    if !seen.contains(&ws) && self.is_wf(&ws) && self.length(&ws) == n + 1 {
                        seen.insert(ws.clone());
                        next.push(ws);
                    }
                }
            }
            all.extend(next.iter().cloned());
            shell = next;
        }
        let mut reps: Vec<WfRep> = all.iter().map(|w| self.rep_unchecked(w)).collect();
        reps.sort();
        reps
    }

    /// Dominant weights in the union of the (closed or open) alcoves `w C`.
    pub fn enumerate_dominant_in_region(&self, alcoves: &[WfRep], region: Region) -> BTreeSet<Weight> {
        let mut out = BTreeSet::new();
        if alcoves.is_empty() {
            return out;
        }
        let rs = &*self.rs;
        let r = rs.rank();
        let max_len = alcoves.iter().map(|a| a.length()).max().unwrap() as i64;
        let bound = (max_len + 1) * self.level;
        let theta_c = rs.coroots()[rs.highest_short_root()].clone();
        let inverses: Vec<AffineElement> = alcoves.iter().map(|a| self.inverse(&a.elem)).collect();
        let inside = |y: &Weight| -> bool {
            let top = rs.pairing_highest(y);
            match region {
                Region::Closed => y.coords().iter().all(|&c| c >= 0) && top <= self.level,
                Region::Interior => y.coords().iter().all(|&c| c > 0) && top < self.level,
            }
        };
        // x = lambda + rho with x_i >= 1 and sum c_i x_i <= bound.
        let mut x = vec![1i64; r];
        loop {
            let used: i64 = x.iter().zip(&theta_c).map(|(a, c)| a * c).sum();
            if used <= bound {
                let xw = Weight::new(x.clone());
                if inverses.iter().any(|wi| inside(&self.act(wi, &xw))) {
                    out.insert(&xw - rs.rho());
                }
                x[0] += 1;
                continue;
            }
            // carry
            let mut i = 0;
            loop {
                x[i] = 1;
                i += 1;
                if i == r {
                    return out;
                }
                x[i] += 1;
                let used: i64 = x.iter().zip(&theta_c).map(|(a, c)| a * c).sum();
                if used <= bound {
                    break;
                }
            }
        }
    }

    /// Checks `s^2 = e` and `(st)^m = e` with the expected Coxeter exponents.
    fn verify_coxeter_relations(&self) -> Result<()> {
        let rs = &*self.rs;
        let n = self.num_generators();
        let theta = &rs.positive_roots_wt()[rs.highest_short_root()];
        // pairing data (<beta_s, beta_t^vee>) where beta_0 = -theta
        let pair = |s: usize, t: usize| -> i64 {
            match (s, t) {
                (0, 0) => 2,
                (0, t) => -theta[t - 1],
                (s, 0) => -rs.pairing_highest(rs.simple_root(s - 1)),
                (s, t) => rs.datum().entry(t - 1, s - 1),
            }
        };
        let e = self.identity();
        for s in 0..n {
            let g = self.generator(s);
            if self.compose(&g, &g) != e {
                return Err(Error::Invariant(format!("generator {s} is not an involution")));
            }
            for t in s + 1..n {
                let m = match pair(s, t) * pair(t, s) {
                    0 => Some(2),
                    1 => Some(3),
                    2 => Some(4),
                    3 => Some(6),
                    _ => None,
                };
                let st = self.compose(&g, &self.generator(t));
                let mut p = st.clone();
                let limit = m.unwrap_or(12);
                for k in 1..=limit {
                    let is_e = p == e;
                    if Some(k) == m {
                        if !is_e {
                            return Err(Error::Invariant(format!("(s{s} s{t})^{k} != e")));
                        }
                    } else if is_e {
                        return Err(Error::Invariant(format!("(s{s} s{t}) has order {k}, expected {m:?}")));
                    }
                    p = self.compose(&p, &st);
                }
            }
        }
        Ok(())
    }

    /// Ball as JSON records: word, finite part, translation, length.
    pub fn ball_json(&self, ball: &[WfRep]) -> Vec<serde_json::Value> {
        #[derive(Serialize)]
        struct Rec<'a> {
            word: &'a [u8],
            finite_part: Vec<usize>,
            translation: &'a Weight,
            length: usize,
        }
        ball.iter()
            .map(|w| {
                let fp = self.rs.weyl().word(w.elem.fin).into_iter().map(|i| i + 1).collect();
                serde_json::to_value(Rec { word: w.word(), finite_part: fp, translation: &w.elem.shift, length: w.length() })
                    .unwrap()
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(t: &str, l: i64) -> AffineGroup {
        AffineGroup::new(Arc::new(RootSystem::parse(t).unwrap()), l).unwrap()
    }

    fn w(c: &[i64]) -> Weight {
        Weight::new(c.to_vec())
    }

    #[test]
    fn level_must_exceed_coxeter_number() {
        let rs = Arc::new(RootSystem::parse("A1").unwrap());
        assert!(matches!(AffineGroup::new(rs.clone(), 2), Err(Error::LevelTooSmall { .. })));
        assert!(AffineGroup::new(rs, 3).is_ok());
    }

    #[test]
    fn a1_affine_reflection() {
        let g = group("A1", 5);
        assert_eq!(g.num_generators(), 2);
        let s0 = g.generator(0);
        assert_eq!(g.dot_act(&s0, &w(&[4])), w(&[4]));
        assert_eq!(g.dot_act(&s0, &w(&[0])), w(&[8]));
        assert_eq!(g.dot_act(&s0, &w(&[3])), w(&[5]));
        assert_eq!(g.dot_act(&g.identity(), &w(&[7])), w(&[7]));
    }

    #[test]
    fn g2_has_three_generators() {
        assert_eq!(group("G2", 7).num_generators(), 3);
    }

    #[test]
    fn lengths_and_descents() {
        let g = group("A1", 5);
        assert_eq!(g.length_and_descents(&g.identity()), (0, vec![]));
        assert_eq!(g.length_and_descents(&g.generator(0)), (1, vec![0]));
        let x = g.from_word(&[0, 1]);
        assert_eq!(g.length_and_descents(&x), (2, vec![1]));
    }

    #[test]
    fn finite_parts() {
        let g = group("A1", 5);
        assert_eq!(g.identity().finite_part(), 0);
        assert_eq!(g.translation(&[1]).finite_part(), 0);
        let wf = g.root_system().weyl();
        assert_eq!(g.generator(0).finite_part(), wf.simple(0));
    }

    #[test]
    fn resolve_examples() {
        let g = group("A1", 5);
        let (x, l0) = g.resolve_dominant(&w(&[0])).unwrap();
        assert!(x.is_identity());
        assert_eq!(l0, w(&[0]));
        let (x, l0) = g.resolve_dominant(&w(&[5])).unwrap();
        assert_eq!(x.word(), &[0]);
        assert_eq!(l0, w(&[3]));
        let (x, l0) = g.resolve_dominant(&w(&[4])).unwrap();
        assert!(x.is_identity());
        assert_eq!(l0, w(&[4]));
        assert!(g.resolve_dominant(&w(&[-1])).is_err());
    }

    #[test]
    fn stabilizers() {
        let g = group("A1", 5);
        assert_eq!(g.stabilizer(&w(&[2])).unwrap(), vec![g.identity()]);
        assert_eq!(g.stabilizer(&w(&[4])).unwrap(), vec![g.identity(), g.generator(0)]);
        assert_eq!(g.stabilizer(&w(&[-1])).unwrap(), vec![g.identity(), g.generator(1)]);
        assert!(matches!(g.stabilizer(&w(&[5])), Err(Error::NotInAlcove(_))));
    }

    #[test]
    fn coset_extreme_examples() {
        let g = group("A1", 5);
        let e = g.identity_rep();
        let trivial = g.coset_extremes(&e, &[g.identity()]).unwrap();
        assert_eq!((trivial.min.word(), trivial.long.word()), (&[][..], &[][..]));
        let stab = g.stabilizer(&w(&[4])).unwrap();
        let c = g.coset_extremes(&e, &stab).unwrap();
        assert_eq!((c.min.word(), c.long.word()), (&[][..], &[0u8][..]));
        let x = g.wf_rep(&g.from_word(&[0, 1])).unwrap();
        let c = g.coset_extremes(&x, &stab).unwrap();
        assert_eq!((c.min.word(), c.long.word()), (&[0u8, 1][..], &[0u8, 1, 0][..]));
        assert!(c.full_coset_in_wf);
    }

    #[test]
    fn balls() {
        let g = group("A1", 5);
        assert_eq!(g.ball(0).len(), 1);
        let b: Vec<String> = g.ball(3).iter().map(|x| x.word_string()).collect();
        assert_eq!(b, vec!["e", "0", "01", "010"]);
        let g2 = group("G2", 7);
        assert_eq!(g2.ball(2).len(), 3);
    }

    #[test]
    fn regions() {
        let g = group("A1", 5);
        let e = vec![g.identity_rep()];
        let got: Vec<Weight> = g.enumerate_dominant_in_region(&e, Region::Closed).into_iter().collect();
        assert_eq!(got, (0..5).map(|k| w(&[k])).collect::<Vec<_>>());
        assert!(g.enumerate_dominant_in_region(&[], Region::Closed).is_empty());
        let g2 = group("G2", 7);
        let e = vec![g2.identity_rep()];
        let got: Vec<Weight> = g2.enumerate_dominant_in_region(&e, Region::Interior).into_iter().collect();
        assert_eq!(got, vec![w(&[0, 0])]);
    }

    #[test]
    fn alcove_points() {
        assert_eq!(group("A1", 5).closed_alcove_points().len(), 6);
        let g = group("G2", 7);
        let pts = g.closed_alcove_points();
        assert_eq!(pts.len(), 8);
        assert!(pts.iter().all(|p| g.in_closed_alcove(p)));
        let regular: Vec<_> = pts.iter().filter(|p| g.stabilizer(p).unwrap().len() == 1).collect();
        assert_eq!(regular, vec![&w(&[0, 0])]);
    }

    #[test]
    fn split_into_finite_and_minimal() {
        let g = group("G2", 7);
        for x in g.ball(6) {
            for u in g.root_system().weyl().elements() {
                let y = g.compose(&AffineElement { fin: u, shift: Weight::zero(2) }, x.element());
                let (u2, rest) = g.split_wf(&y);
                assert_eq!(u2, u);
                assert_eq!(&rest, x.element());
            }
        }
    }
}
