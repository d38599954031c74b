//! Reference implementations used only by tests. None of them share code
//! paths with the library's algorithms beyond parsing a root system.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};
use std::sync::Arc;

use tiltcell::affine::AffineGroup;
use tiltcell::hecke::KlBasis;
use tiltcell::rootdata::{RootSystem, Weight};
use tiltcell::tilting::Tilting;

pub fn root_system(t: &str) -> Arc<RootSystem> {
    Arc::new(RootSystem::parse(t).unwrap())
}

pub fn group(t: &str, l: i64) -> Arc<AffineGroup> {
    Arc::new(AffineGroup::new(root_system(t), l).unwrap())
}

pub fn kl(t: &str, l: i64) -> Arc<KlBasis> {
    Arc::new(KlBasis::new(group(t, l)))
}

pub fn tilting(t: &str, l: i64) -> Tilting {
    Tilting::new(kl(t, l))
}

pub fn w(c: &[i64]) -> Weight {
    Weight::new(c.to_vec())
}

/// Roots as the orbit of the simple roots under simple reflections written
/// directly from the Cartan matrix.
pub fn roots_by_orbit(rs: &RootSystem) -> HashSet<Vec<i64>> {
    let r = rs.rank();
    let a = |i: usize, j: usize| rs.datum().entry(i, j);
    // s_i(beta) = beta - <beta, alpha_i^vee> alpha_i in root coordinates.
    let reflect = |i: usize, b: &Vec<i64>| {
        let p: i64 = (0..r).map(|j| b[j] * a(i, j)).sum();
        let mut out = b.clone();
        out[i] -= p;
        out
    };
    let mut seen = HashSet::new();
    let mut queue: VecDeque<Vec<i64>> = (0..r).map(|i| (0..r).map(|j| i64::from(i == j)).collect()).collect();
    while let Some(b) = queue.pop_front() {
        if seen.insert(b.clone()) {
            for i in 0..r {
                queue.push_back(reflect(i, &b));
            }
        }
    }
    seen
}

type Laurent = BTreeMap<Vec<i64>, i64>;

fn reflect_weight(rs: &RootSystem, i: usize, x: &[i64]) -> Vec<i64> {
    let r = rs.rank();
    let c = x[i];
    (0..r).map(|j| x[j] - c * rs.datum().entry(j, i)).collect()
}

/// `sum_w sign(w) e^{w x}` for strictly dominant `x`.
fn alternant(rs: &RootSystem, x: &[i64]) -> Laurent {
    let mut out = BTreeMap::new();
    let mut seen: HashMap<Vec<i64>, i64> = HashMap::new();
    let mut queue = VecDeque::from([(x.to_vec(), 1i64)]);
    while let Some((y, s)) = queue.pop_front() {
        if seen.contains_key(&y) {
            continue;
        }
        seen.insert(y.clone(), s);
        out.insert(y.clone(), s);
        for i in 0..rs.rank() {
            queue.push_back((reflect_weight(rs, i, &y), -s));
        }
    }
    out
}

/// Linear functional positive on every simple root.
fn functional(rs: &RootSystem) -> Vec<f64> {
    // Solve A^T g = (1 + small perturbations), so g . alpha_j > 0.
    let r = rs.rank();
    let mut m: Vec<Vec<f64>> = (0..r)
        .map(|i| {
            let mut row: Vec<f64> = (0..r).map(|j| rs.datum().entry(j, i) as f64).collect();
            row.push(1.0 + 1e-3 * (i as f64 + 1.0) / 7.0);
            row
        })
        .collect();
    for c in 0..r {
        let p = (c..r).max_by(|&a, &b| m[a][c].abs().total_cmp(&m[b][c].abs())).unwrap();
        m.swap(c, p);
        for k in 0..r {
            if k != c {
                let f = m[k][c] / m[c][c];
                for j in c..=r {
                    m[k][j] -= f * m[c][j];
                }
            }
        }
    }
    (0..r).map(|i| m[i][r] / m[i][i]).collect()
}

/// Weyl character of `V(lambda)` as the quotient `A_{lambda+rho} / A_rho`.
pub fn character_by_division(rs: &RootSystem, lambda: &Weight) -> BTreeMap<Weight, i64> {
    let r = rs.rank();
    let g = functional(rs);
    let key = |x: &Vec<i64>| {
        let f: f64 = x.iter().zip(&g).map(|(a, b)| *a as f64 * b).sum();
        (ordered(f), x.clone())
    };
    let rho: Vec<i64> = vec![1; r];
    let lr: Vec<i64> = lambda.coords().iter().map(|c| c + 1).collect();
    let mut num = alternant(rs, &lr);
    let den = alternant(rs, &rho);
    let mut quot = BTreeMap::new();
    while let Some((top, c)) = num.iter().max_by_key(|(x, _)| key(x)).map(|(x, &c)| (x.clone(), c)) {
        let m: Vec<i64> = top.iter().zip(&rho).map(|(a, b)| a - b).collect();
        quot.insert(Weight::new(m.clone()), c);
        for (d, &s) in &den {
            let y: Vec<i64> = d.iter().zip(&m).map(|(a, b)| a + b).collect();
            let e = num.entry(y.clone()).or_insert(0);
            *e -= c * s;
            if *e == 0 {
                num.remove(&y);
            }
        }
    }
    quot
}

fn ordered(f: f64) -> i64 {
    (f * 1e6).round() as i64
}

/// Weyl factors of `V(a) (x) V(b)` by multiplying characters and peeling
/// highest dominant weights.
pub fn tensor_by_peeling(rs: &RootSystem, a: &Weight, b: &Weight) -> BTreeMap<Weight, i64> {
    let ca = character_by_division(rs, a);
    let cb = character_by_division(rs, b);
    let mut prod: BTreeMap<Weight, i64> = BTreeMap::new();
    for (x, m) in &ca {
        for (y, n) in &cb {
            *prod.entry(x + y).or_insert(0) += m * n;
        }
    }
    prod.retain(|_, v| *v != 0);
    let g = functional(rs);
    let f = |x: &Weight| ordered(x.coords().iter().zip(&g).map(|(a, b)| *a as f64 * b).sum());
    let mut out = BTreeMap::new();
    while let Some((top, c)) =
        prod.iter().filter(|(x, _)| x.is_dominant()).max_by_key(|(x, _)| (f(x), (*x).clone())).map(|(x, &c)| (x.clone(), c))
    {
        out.insert(top.clone(), c);
        for (x, m) in character_by_division(rs, &top) {
            let e = prod.entry(x.clone()).or_insert(0);
            *e -= c * m;
            if *e == 0 {
                prod.remove(&x);
            }
        }
    }
    assert!(prod.is_empty(), "leftover terms after peeling");
    out
}

/// The sl2 fusion rule at level `k`: `a (x) b = sum c` over
/// `|a-b| <= c <= min(a+b, 2k-a-b)` with `a+b+c` even.
pub fn sl2_fusion(k: i64, a: i64, b: i64) -> Vec<i64> {
    ((a - b).abs()..=(a + b).min(2 * k - a - b)).filter(|c| (a + b + c) % 2 == 0).collect()
}

/// Affine Weyl group of type `A_{n-1}` as affine permutations, with an
/// independent full Hecke algebra and Kazhdan–Lusztig basis.
pub mod affine_perm {
    use super::*;

    /// Window `[w(1), ..., w(n)]`.
    pub type Perm = Vec<i64>;

    pub fn identity(n: usize) -> Perm {
        (1..=n as i64).collect()
    }

    fn value(w: &Perm, i: i64) -> i64 {
        let n = w.len() as i64;
        let k = (i - 1).div_euclid(n);
        let r = (i - 1).rem_euclid(n);
        w[r as usize] + k * n
    }

    /// `w s_i`: swap positions `i` and `i+1`.
    pub fn right(w: &Perm, i: usize) -> Perm {
        let n = w.len() as i64;
        let i = i as i64;
        (1..=n)
            .map(|p| {
                if (p - i).rem_euclid(n) == 0 {
                    value(w, p + 1)
                } else if (p - i - 1).rem_euclid(n) == 0 {
                    value(w, p - 1)
                } else {
                    value(w, p)
                }
            })
            .collect()
    }

    /// `s_i w`: swap values congruent to `i` and `i+1`.
    pub fn left(w: &Perm, i: usize) -> Perm {
        let n = w.len() as i64;
        let i = i as i64;
        w.iter()
            .map(|&v| {
                if (v - i).rem_euclid(n) == 0 {
                    v + 1
                } else if (v - i - 1).rem_euclid(n) == 0 {
                    v - 1
                } else {
                    v
                }
            })
            .collect()
    }

    /// Shi's formula.
    pub fn length(w: &Perm) -> usize {
        let n = w.len() as i64;
        let mut s = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                s += (w[j] - w[i]).div_euclid(n).unsigned_abs() as usize;
            }
        }
        s
    }

    /// Lexicographically smallest reduced word, by stripping left descents.
    pub fn word(w: &Perm) -> Vec<u8> {
        let n = w.len();
        let mut cur = w.clone();
        let mut out = Vec::new();
        let mut l = length(&cur);
        while l > 0 {
            let s = (0..n).find(|&s| length(&left(&cur, s)) < l).unwrap();
            out.push(s as u8);
            cur = left(&cur, s);
            l -= 1;
        }
        out
    }

    pub fn is_minimal(w: &Perm) -> bool {
        let l = length(w);
        (1..w.len()).all(|s| length(&left(w, s)) > l)
    }

    /// Strip finite left descents: `w = u w''`, returns `(l(u), w'')`.
    pub fn split(w: &Perm) -> (usize, Perm) {
        let mut cur = w.clone();
        let mut k = 0;
        loop {
            let l = length(&cur);
            match (1..w.len()).find(|&s| length(&left(&cur, s)) < l) {
                Some(s) => {
                    cur = left(&cur, s);
                    k += 1;
                }
                None => return (k, cur),
            }
        }
    }

    pub fn ball(n: usize, max_len: usize) -> Vec<Perm> {
        let mut seen = HashSet::from([identity(n)]);
        let mut layer = vec![identity(n)];
        let mut all = layer.clone();
        for d in 0..max_len {
            let mut next = Vec::new();
            for x in &layer {
                for s in 0..n {
                    let y = right(x, s);
                    if length(&y) == d + 1 && seen.insert(y.clone()) {
                        next.push(y);
                    }
                }
            }
            all.extend(next.iter().cloned());
            layer = next;
        }
        all
    }

    pub type Poly = BTreeMap<i32, i64>;
    pub type Elem = BTreeMap<Perm, Poly>;

    fn add(e: &mut Elem, x: Perm, p: &Poly, shift: i32, scale: i64) {
        let slot = e.entry(x.clone()).or_default();
        for (&k, &c) in p {
            let v = slot.entry(k + shift).or_insert(0);
            *v += c * scale;
            if *v == 0 {
                slot.remove(&(k + shift));
            }
        }
        if slot.is_empty() {
            e.remove(&x);
        }
    }

    /// `h Hbar_s` in the full Hecke algebra with `H_s^2 = 1 + (v^-1 - v) H_s`.
    pub fn times_hbar(h: &Elem, s: usize) -> Elem {
        let mut out = Elem::new();
        for (x, p) in h {
            let xs = right(x, s);
            let up = length(&xs) > length(x);
            // H_x H_s = H_xs (up) or H_xs + (v^-1 - v) H_x (down); plus v H_x.
            add(&mut out, xs, p, 0, 1);
            add(&mut out, x.clone(), p, if up { 1 } else { -1 }, 1);
        }
        out
    }

    /// Full KL basis on a ball by `Hbar_w Hbar_s = Hbar_ws + sum mu(y,w) Hbar_y`.
    pub struct FullKl {
        pub n: usize,
        pub basis: HashMap<Perm, Elem>,
    }

    impl FullKl {
        pub fn new(n: usize, max_len: usize) -> Self {
            let mut elems = ball(n, max_len);
            elems.sort_by_key(length);
            let mut basis: HashMap<Perm, Elem> = HashMap::new();
            for w in elems {
                if length(&w) == 0 {
                    basis.insert(w.clone(), Elem::from([(w, Poly::from([(0, 1)]))]));
                    continue;
                }
                let l = length(&w);
                let s = (0..n).find(|&s| length(&right(&w, s)) < l).unwrap();
                let x = right(&w, s);
                let hx = &basis[&x];
                let mut out = times_hbar(hx, s);
                for (y, p) in hx.iter() {
                    if y == &x {
                        continue;
                    }
                    let mu = p.get(&1).copied().unwrap_or(0);
                    if mu != 0 && length(&right(y, s)) < length(y) {
                        let hy = basis[y].clone();
                        for (z, q) in &hy {
                            add(&mut out, z.clone(), q, 0, -mu);
                        }
                    }
                }
                basis.insert(w, out);
            }
            FullKl { n, basis }
        }

        /// `1 (x) Hbar_w` in the antispherical module, keyed by reduced words.
        pub fn project(&self, w: &Perm) -> BTreeMap<Vec<u8>, Poly> {
            project_elem(&self.basis[w])
        }

        /// Right cells of minimal coset representatives of length at most
        /// `max_len`, by naive transitive closure of the relation "`Nbar_y`
        /// occurs in `Nbar_x Hbar_s`". Needs the basis up to `max_len + 1`.
        pub fn antispherical_cells(&self, max_len: usize) -> BTreeSet<BTreeSet<Vec<u8>>> {
            let mins: Vec<Perm> = self.basis.keys().filter(|w| is_minimal(w) && length(w) <= max_len + 1).cloned().collect();
            let proj: HashMap<Vec<u8>, BTreeMap<Vec<u8>, Poly>> = mins.iter().map(|w| (word(w), self.project(w))).collect();
            let nodes: Vec<&Perm> = mins.iter().filter(|w| length(w) <= max_len).collect();
            let index: HashMap<Vec<u8>, usize> = nodes.iter().enumerate().map(|(i, w)| (word(w), i)).collect();
            let n = nodes.len();
            let mut reach = vec![vec![false; n]; n];
            for (i, w) in nodes.iter().enumerate() {
                reach[i][i] = true;
                for s in 0..self.n {
                    let mut rest = project_elem(&times_hbar(&self.basis[*w], s));
                    while let Some(top) = rest.keys().max_by_key(|k| (k.len(), (*k).clone())).cloned() {
                        let c = rest[&top].clone();
                        if let Some(&j) = index.get(&top) {
                            reach[i][j] = true;
                        }
                        let basis = &proj[&top];
                        for (y, q) in basis {
                            let slot = rest.entry(y.clone()).or_default();
                            for (&a, &x) in &c {
                                for (&b, &z) in q {
                                    *slot.entry(a + b).or_insert(0) -= x * z;
                                }
                            }
                            slot.retain(|_, v| *v != 0);
                            if slot.is_empty() {
                                rest.remove(y);
                            }
                        }
                    }
                }
            }
            for k in 0..n {
                for i in 0..n {
                    if reach[i][k] {
                        for j in 0..n {
                            if reach[k][j] {
                                reach[i][j] = true;
                            }
                        }
                    }
                }
            }
            (0..n)
                .map(|i| (0..n).filter(|&j| reach[i][j] && reach[j][i]).map(|j| word(nodes[j])).collect())
                .collect()
        }
    }

    fn project_elem(e: &Elem) -> BTreeMap<Vec<u8>, Poly> {
        let mut out: Elem = Elem::new();
        for (y, p) in e {
            let (k, rest) = split(y);
            let sign = if k % 2 == 0 { 1 } else { -1 };
            add(&mut out, rest, p, k as i32, sign);
        }
        out.into_iter().map(|(x, p)| (word(&x), p)).collect()
    }
}
