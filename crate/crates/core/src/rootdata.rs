//! Finite root data: Cartan matrices, positive roots and coroots, the finite
//! Weyl group and the dot-action reduction to the dominant chamber.
//!
//! Conventions: the Cartan entry `a_ij` is `<alpha_j, alpha_i^vee>`, simple
//! roots follow Bourbaki numbering (for G2, `alpha_1` is short), and weights
//! are integer vectors in the fundamental-weight basis. Roots are stored both
//! in simple-root coordinates and in weight coordinates.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::ops::{Add, AddAssign, Index, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An integral weight in fundamental-weight coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight(coords)
    }

    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    /// The fundamental weight `omega_i` (zero-based `i`).
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut c = vec![0; rank];
        c[i] = 1;
        Weight(c)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_strictly_dominant(&self) -> bool {
        self.0.iter().all(|&c| c > 0)
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Weight {
    type Err = Error;

    /// Parses `1,0` or `(1,0)`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        let coords = t
            .split(',')
            .map(|p| p.trim().parse::<i64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::InvalidArgument(format!("bad weight `{s}`: {e}")))?;
        Ok(Weight(coords))
    }
}

impl Index<usize> for Weight {
    type Output = i64;
    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl Add<&Weight> for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub<&Weight> for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl AddAssign<&Weight> for Weight {
    fn add_assign(&mut self, rhs: &Weight) {
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a += b;
        }
    }
}

impl SubAssign<&Weight> for Weight {
    fn sub_assign(&mut self, rhs: &Weight) {
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a -= b;
        }
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

impl Mul<&Weight> for i64 {
    type Output = Weight;
    fn mul(self, rhs: &Weight) -> Weight {
        Weight(rhs.0.iter().map(|a| self * a).collect())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

/// Family letter, rank and Cartan matrix of a finite irreducible root system.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CartanDatum {
    family: Family,
    rank: usize,
    cartan: Vec<Vec<i64>>,
}

impl CartanDatum {
    /// The standard datum for a family and rank.
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let bad = || Error::UnknownType(format!("{}{}", family.letter(), rank));
        let ok = match family {
            Family::A => rank >= 1,
            Family::B => rank >= 2,
            Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if !ok {
            return Err(bad());
        }
        let n = rank;
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize| {
            a[i][j] = -1;
            a[j][i] = -1;
        };
        match family {
            Family::A | Family::B | Family::C => {
                for i in 0..n - 1 {
                    link(i, i + 1);
                }
            }
            Family::D => {
                for i in 0..n - 2 {
                    link(i, i + 1);
                }
                link(n - 3, n - 1);
            }
            Family::E => {
                // Bourbaki: 1-3-4-5-6-7-8 with 2 attached to 4.
                link(0, 2);
                link(1, 3);
                for i in 2..n - 1 {
                    link(i, i + 1);
                }
            }
            Family::F => {
                link(0, 1);
                link(1, 2);
                link(2, 3);
            }
            Family::G => link(0, 1),
        }
        match family {
            Family::B => a[n - 1][n - 2] = -2,
            Family::C => a[n - 2][n - 1] = -2,
            Family::F => a[2][1] = -2,
            Family::G => a[0][1] = -3,
            _ => {}
        }
        Self::from_matrix(family, a)
    }

    /// Validates an explicit matrix.
    pub fn from_matrix(family: Family, cartan: Vec<Vec<i64>>) -> Result<Self> {
        let n = cartan.len();
        if n == 0 || cartan.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidCartan("matrix must be square and nonempty".into()));
        }
        for i in 0..n {
            if cartan[i][i] != 2 {
                return Err(Error::InvalidCartan(format!("diagonal entry a_{i}{i} is not 2")));
            }
            for j in 0..n {
                if i == j {
                    continue;
                }
                if cartan[i][j] > 0 {
                    return Err(Error::InvalidCartan(format!("off-diagonal entry a_{i}{j} is positive")));
                }
                if (cartan[i][j] == 0) != (cartan[j][i] == 0) {
                    return Err(Error::InvalidCartan(format!("a_{i}{j} and a_{j}{i} disagree on vanishing")));
                }
            }
        }
        for k in 1..=n {
            let minor: Vec<Vec<i64>> = cartan[..k].iter().map(|r| r[..k].to_vec()).collect();
            let d = determinant(&minor);
            if d <= 0 {
                return Err(Error::InvalidCartan(format!(
                    "leading principal minor of order {k} is {d}, not positive (not of finite type)"
                )));
            }
        }
        Ok(CartanDatum { family, rank: n, cartan })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `a_ij = <alpha_j, alpha_i^vee>`.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.cartan[i][j]
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn label(&self) -> String {
        format!("{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for CartanDatum {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(Error::UnknownType(s.to_string())),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| Error::UnknownType(s.to_string()))?;
        CartanDatum::new(family, rank)
    }
}

/// Fraction-free (Bareiss) determinant.
fn determinant(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

/// The finite Weyl group, materialized as integer matrices acting on weight
/// coordinates. Element `0` is the identity.
#[derive(Clone, Debug)]
pub struct WeylGroup {
    rank: usize,
    mats: Vec<Vec<i64>>,
    index: HashMap<Vec<i64>, usize>,
    lengths: Vec<usize>,
    inverses: Vec<usize>,
    /// `right_simple[u][i]` is the index of `u s_i`.
    right_simple: Vec<Vec<usize>>,
    left_simple: Vec<Vec<usize>>,
}

impl WeylGroup {
    fn generate(rank: usize, simple_roots: &[Weight]) -> Self {
        let identity: Vec<i64> = (0..rank * rank).map(|k| if k / rank == k % rank { 1 } else { 0 }).collect();
        let gens: Vec<Vec<i64>> = (0..rank)
            .map(|i| {
                // s_i(lambda)_j = lambda_j - lambda_i (alpha_i)_j
                let mut m = identity.clone();
                for j in 0..rank {
                    m[j * rank + i] -= simple_roots[i][j];
                }
                m
            })
            .collect();
        let mut mats = vec![identity.clone()];
        let mut lengths = vec![0];
        let mut index = HashMap::new();
        index.insert(identity, 0usize);
        let mut queue = VecDeque::from([0usize]);
        while let Some(u) = queue.pop_front() {
            for g in &gens {
                let p = mat_mul(g, &mats[u], rank);
                if !index.contains_key(&p) {
                    index.insert(p.clone(), mats.len());
                    mats.push(p);
                    lengths.push(lengths[u] + 1);
                    queue.push_back(mats.len() - 1);
                }
            }
        }
        let n = mats.len();
        let mut right_simple = vec![vec![0; rank]; n];
        let mut left_simple = vec![vec![0; rank]; n];
        let mut inverses = vec![0; n];
        for u in 0..n {
            for (i, g) in gens.iter().enumerate() {
                right_simple[u][i] = index[&mat_mul(&mats[u], g, rank)];
                left_simple[u][i] = index[&mat_mul(g, &mats[u], rank)];
            }
        }
        // Inverse of an integer orthogonal-like action: search via words.
        for u in 0..n {
            let word = Self::word_of(u, &lengths, &left_simple, rank);
            let mut v = 0;
            for &i in &word {
                v = left_simple[v][i];
            }
            inverses[u] = v;
        }
        WeylGroup { rank, mats, index, lengths, inverses, right_simple, left_simple }
    }

    fn word_of(u: usize, lengths: &[usize], left_simple: &[Vec<usize>], rank: usize) -> Vec<usize> {
        let mut word = Vec::new();
        let mut cur = u;
        while lengths[cur] > 0 {
            let i = (0..rank).find(|&i| lengths[left_simple[cur][i]] < lengths[cur]).expect("nonidentity has a descent");
            word.push(i);
            cur = left_simple[cur][i];
        }
        word
    }

    pub fn order(&self) -> usize {
        self.mats.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn length(&self, u: usize) -> usize {
        self.lengths[u]
    }

    pub fn sign(&self, u: usize) -> i64 {
        if self.lengths[u] % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn inverse(&self, u: usize) -> usize {
        self.inverses[u]
    }

    pub fn simple(&self, i: usize) -> usize {
        self.right_simple[0][i]
    }

    pub fn mul_simple(&self, u: usize, i: usize) -> usize {
        self.right_simple[u][i]
    }

    pub fn simple_mul(&self, i: usize, u: usize) -> usize {
        self.left_simple[u][i]
    }

    pub fn compose(&self, a: usize, b: usize) -> usize {
        self.index[&mat_mul(&self.mats[a], &self.mats[b], self.rank)]
    }

    pub fn act(&self, u: usize, w: &Weight) -> Weight {
        let m = &self.mats[u];
        let r = self.rank;
        Weight::new((0..r).map(|i| (0..r).map(|j| m[i * r + j] * w[j]).sum()).collect())
    }

    /// Lexicographically smallest reduced word, over zero-based simple indices.
    pub fn word(&self, u: usize) -> Vec<usize> {
        Self::word_of(u, &self.lengths, &self.left_simple, self.rank)
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> {
        0..self.mats.len()
    }
}

fn mat_mul(a: &[i64], b: &[i64], r: usize) -> Vec<i64> {
    let mut c = vec![0; r * r];
    for i in 0..r {
        for k in 0..r {
            let x = a[i * r + k];
            if x == 0 {
                continue;
            }
            for j in 0..r {
                c[i * r + j] += x * b[k * r + j];
            }
        }
    }
    c
}

/// Result of reducing a weight to the dominant chamber under the dot action.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SignedDominant {
    Zero,
    Signed { sign: i64, weight: Weight },
}

/// A finite root system built from a Cartan datum.
#[derive(Clone, Debug)]
pub struct RootSystem {
    datum: CartanDatum,
    /// Half squared lengths of the simple roots, smallest equal to 1.
    norms: Vec<i64>,
    positive_roots: Vec<Vec<i64>>,
    positive_roots_wt: Vec<Weight>,
    /// Coroot of each positive root in simple-coroot coordinates; pairing
    /// with a weight is the dot product with its coordinates.
    coroots: Vec<Vec<i64>>,
    simple_roots_wt: Vec<Weight>,
    rho: Weight,
    highest_short_root: usize,
    coxeter_number: usize,
    weyl: WeylGroup,
}

impl RootSystem {
    pub fn new(datum: CartanDatum) -> Result<Self> {
        build_root_system(datum)
    }

    /// `RootSystem::parse("G2")`.
    pub fn parse(label: &str) -> Result<Self> {
        build_root_system(label.parse()?)
    }

    pub fn datum(&self) -> &CartanDatum {
        &self.datum
    }

    pub fn label(&self) -> String {
        self.datum.label()
    }

    pub fn rank(&self) -> usize {
        self.datum.rank
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    pub fn coxeter_number(&self) -> usize {
        self.coxeter_number
    }

    pub fn weyl(&self) -> &WeylGroup {
        &self.weyl
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    pub fn positive_roots_wt(&self) -> &[Weight] {
        &self.positive_roots_wt
    }

    pub fn coroots(&self) -> &[Vec<i64>] {
        &self.coroots
    }

    pub fn simple_root(&self, i: usize) -> &Weight {
        &self.simple_roots_wt[i]
    }

    pub fn highest_short_root(&self) -> usize {
        self.highest_short_root
    }

    pub fn norms(&self) -> &[i64] {
        &self.norms
    }

    /// `<lambda, alpha_k^vee>` for the `k`-th positive root.
    pub fn pairing_coroot(&self, lambda: &Weight, k: usize) -> i64 {
        self.coroots[k].iter().zip(lambda.coords()).map(|(c, l)| c * l).sum()
    }

    /// `<lambda, theta_s^vee>` where `theta_s^vee` is the highest coroot.
    pub fn pairing_highest(&self, lambda: &Weight) -> i64 {
        self.pairing_coroot(lambda, self.highest_short_root)
    }

    /// Convert simple-root coordinates to weight coordinates.
    pub fn root_to_weight(&self, beta: &[i64]) -> Weight {
        let mut w = Weight::zero(self.rank());
        for (j, &c) in beta.iter().enumerate() {
            if c != 0 {
                w += &(c * &self.simple_roots_wt[j]);
            }
        }
        w
    }

    /// `(lambda, beta)` for a weight and an element of the root lattice given
    /// in simple-root coordinates, using the normalization where short
    /// simple roots have squared length 2.
    pub fn form_weight_root(&self, lambda: &Weight, beta: &[i64]) -> i64 {
        (0..self.rank()).map(|j| lambda[j] * beta[j] * self.norms[j]).sum()
    }

    /// `(beta, beta)` for `beta` in simple-root coordinates.
    pub fn form_root_root(&self, beta: &[i64]) -> i64 {
        let r = self.rank();
        let mut s = 0;
        for i in 0..r {
            for j in 0..r {
                s += beta[i] * beta[j] * self.datum.entry(i, j) * self.norms[i];
            }
        }
        s
    }

    /// `<lambda, 2 rho^vee>`, the sum of pairings with all positive coroots.
    pub fn height(&self, lambda: &Weight) -> i64 {
        (0..self.coroots.len()).map(|k| self.pairing_coroot(lambda, k)).sum()
    }

    pub fn reflect_simple(&self, i: usize, lambda: &Weight) -> Weight {
        let c = lambda[i];
        if c == 0 {
            return lambda.clone();
        }
        lambda - &(c * &self.simple_roots_wt[i])
    }

    /// The orbit of `lambda` under the linear action of the finite Weyl group.
    pub fn weyl_orbit(&self, lambda: &Weight) -> Vec<Weight> {
        let mut seen = HashSet::from([lambda.clone()]);
        let mut out = vec![lambda.clone()];
        let mut k = 0;
        while k < out.len() {
            for i in 0..self.rank() {
                let m = self.reflect_simple(i, &out[k]);
                if seen.insert(m.clone()) {
                    out.push(m);
                }
            }
            k += 1;
        }
        out.sort();
        out
    }

    /// Dominant representative under the linear action together with the
    /// number of simple reflections used.
    pub fn to_dominant(&self, lambda: &Weight) -> (Weight, usize) {
        let mut x = lambda.clone();
        let mut steps = 0;
        while let Some(i) = (0..self.rank()).find(|&i| x[i] < 0) {
            x = self.reflect_simple(i, &x);
            steps += 1;
        }
        (x, steps)
    }

    /// Dot-action reduction: `Zero` when `lambda + rho` lies on a reflecting
    /// hyperplane, otherwise the dominant `w . lambda` with sign `(-1)^l(w)`.
    pub fn dominant_rep_signed(&self, lambda: &Weight) -> SignedDominant {
        let shifted = lambda + &self.rho;
        let (x, steps) = self.to_dominant(&shifted);
        if x.coords().contains(&0) {
            return SignedDominant::Zero;
        }
        SignedDominant::Signed { sign: if steps % 2 == 0 { 1 } else { -1 }, weight: &x - &self.rho }
    }

    /// JSON dump of the positive roots and coroots, for debugging.
    pub fn to_json(&self) -> serde_json::Value {
        let roots: Vec<_> = self
            .positive_roots
            .iter()
            .zip(&self.positive_roots_wt)
            .zip(&self.coroots)
            .map(|((r, w), c)| serde_json::json!({"root": r, "weight": w, "coroot": c}))
            .collect();
        serde_json::json!({
            "type": self.label(),
            "rank": self.rank(),
            "cartan": self.datum.cartan,
            "rho": self.rho,
            "coxeter_number": self.coxeter_number,
            "weyl_order": self.weyl.order(),
            "highest_short_root": self.positive_roots[self.highest_short_root],
            "positive_roots": roots,
        })
    }
}

/// Enumerates positive roots by height using root strings, then derives
/// coroots, rho, the highest short root and the Coxeter number.
pub fn build_root_system(datum: CartanDatum) -> Result<RootSystem> {
    let r = datum.rank;
    let a = |i: usize, j: usize| datum.entry(i, j);

    // Symmetrizer: a_ij n_i = a_ji n_j.
    let mut norms_q: Vec<Option<Ratio<i64>>> = vec![None; r];
    for start in 0..r {
        if norms_q[start].is_some() {
            continue;
        }
        norms_q[start] = Some(Ratio::from_integer(1));
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            let ni = norms_q[i].unwrap();
            for j in 0..r {
                if i != j && a(i, j) != 0 {
                    let nj = ni * Ratio::new(a(i, j), a(j, i));
                    match norms_q[j] {
                        None => {
                            norms_q[j] = Some(nj);
                            stack.push(j);
                        }
                        Some(old) if old != nj => {
                            return Err(Error::InvalidCartan("matrix is not symmetrizable".into()));
                        }
                        _ => {}
                    }
                }
            }
        }
    }
    let denom_lcm = norms_q.iter().fold(1i64, |l, n| l.lcm(n.unwrap().denom()));
    let mut norms: Vec<i64> = norms_q.iter().map(|n| (n.unwrap() * denom_lcm).to_integer()).collect();
    let g = norms.iter().fold(0i64, |g, &n| g.gcd(&n));
    for n in &mut norms {
        *n /= g;
    }

    let unit = |i: usize| -> Vec<i64> { (0..r).map(|k| if k == i { 1 } else { 0 }).collect() };
    let mut roots: Vec<Vec<i64>> = (0..r).map(unit).collect();
    let mut set: HashSet<Vec<i64>> = roots.iter().cloned().collect();
    let mut frontier = roots.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for beta in &frontier {
            for i in 0..r {
                if *beta == unit(i) {
                    continue;
                }
                let mut p = 0;
                loop {
                    let mut down = beta.clone();
                    down[i] -= p + 1;
                    if set.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = (0..r).map(|j| beta[j] * a(i, j)).sum();
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if set.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        roots.extend(next.iter().cloned());
        frontier = next;
    }
    roots.sort_by(|x, y| (x.iter().sum::<i64>(), x).cmp(&(y.iter().sum::<i64>(), y)));

    let simple_roots_wt: Vec<Weight> = (0..r).map(|j| Weight::new((0..r).map(|i| a(i, j)).collect())).collect();
    let half_norm = |beta: &[i64]| -> i64 {
        let mut s = 0;
        for i in 0..r {
            for j in 0..r {
                s += beta[i] * beta[j] * a(i, j) * norms[i];
            }
        }
        s / 2
    };
    let mut coroots = Vec::with_capacity(roots.len());
    let mut root_norms = Vec::with_capacity(roots.len());
    for beta in &roots {
        let nb = half_norm(beta);
        let mut c = Vec::with_capacity(r);
        for i in 0..r {
            let num = beta[i] * norms[i];
            if num % nb != 0 {
                return Err(Error::Invariant(format!("coroot of {beta:?} is not integral")));
            }
            c.push(num / nb);
        }
        coroots.push(c);
        root_norms.push(nb);
    }
    let positive_roots_wt: Vec<Weight> = roots
        .iter()
        .map(|beta| {
            let mut w = Weight::zero(r);
            for (j, &c) in beta.iter().enumerate() {
                w += &(c * &simple_roots_wt[j]);
            }
            w
        })
        .collect();
    let min_norm = *root_norms.iter().min().unwrap();
    let highest_short_root = (0..roots.len())
        .filter(|&k| root_norms[k] == min_norm)
        .max_by_key(|&k| roots[k].iter().sum::<i64>())
        .unwrap();
    let rho = Weight::new(vec![1; r]);
    let coxeter_number = 2 * roots.len() / r;
    let weyl = WeylGroup::generate(r, &simple_roots_wt);

    let rs = RootSystem {
        datum,
        norms,
        positive_roots: roots,
        positive_roots_wt,
        coroots,
        simple_roots_wt,
        rho,
        highest_short_root,
        coxeter_number,
        weyl,
    };
    let top = rs.pairing_highest(&rs.rho);
    if top != coxeter_number as i64 - 1 {
        return Err(Error::Invariant(format!(
            "<rho, theta_s^vee> = {top} but h - 1 = {}",
            coxeter_number - 1
        )));
    }
    Ok(rs)
}
