//! Laurent polynomials, the antispherical module `N` with its
//! Kazhdan–Lusztig basis, and the specialization `N -> N^1` at `v = 1`.
//!
//! The right action of `Hbar_s = H_s + v` on the standard basis is
//!
//! * `N_x Hbar_s = N_xs + v N_x`      if `xs` is in `W^f` and `xs > x`,
//! * `N_x Hbar_s = N_xs + v^-1 N_x`   if `xs` is in `W^f` and `xs < x`,
//! * `N_x Hbar_s = 0`                 otherwise.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::fs;
use std::io::Write as _;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::path::{Path, PathBuf};
use std::sync::{Arc, RwLock};

use log::{debug, warn};
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::affine::{word_string, AffineElement, AffineGroup, WfRep};
use crate::error::{Error, Result};

/// Element of `Z[v, v^-1]` with no stored zero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i32, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c v^e`.
    pub fn monomial(c: impl Into<BigInt>, e: i32) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c.into());
        p
    }

    pub fn v() -> Self {
        Self::monomial(1, 1)
    }

    pub fn add_term(&mut self, e: i32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: i32) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn min_degree(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    /// Multiply by `v^k`.
    pub fn shift(&self, k: i32) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect() }
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Image under `v -> v^-1`.
    pub fn bar(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(&e, c)| (-e, c.clone())).collect() }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(&e, a)| (e, a * c)).collect() }
    }

    /// All coefficients are nonnegative and no exponent is negative.
    pub fn is_in_nonneg_polynomials(&self) -> bool {
        self.terms.iter().all(|(&e, c)| e >= 0 && !c.is_negative())
    }

    /// Lies in `v Z[v]`.
    pub fn is_in_v_zv(&self) -> bool {
        self.terms.keys().all(|&e| e >= 1)
    }

    fn parse_terms(s: &str) -> Option<Self> {
        let mut p = LaurentPoly::zero();
        if s.is_empty() {
            return Some(p);
        }
        for t in s.split(',') {
            let (e, c) = t.split_once(':')?;
            p.add_term(e.parse().ok()?, c.parse().ok()?);
        }
        Some(p)
    }

    fn encode_terms(&self) -> String {
        self.terms.iter().map(|(e, c)| format!("{e}:{c}")).collect::<Vec<_>>().join(",")
    }
}

impl fmt::Display for LaurentPoly {
    /// Ascending exponents, e.g. `v^-1 + 2 + v^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (&e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let var = match e {
                0 => String::new(),
                1 => "v".to_string(),
                _ => format!("v^{e}"),
            };
            if var.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                f.write_str(&var)?;
            } else {
                write!(f, "{a}{var}")?;
            }
        }
        Ok(())
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, -c);
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect() }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&a, c) in &self.terms {
            for (&b, d) in &rhs.terms {
                out.add_term(a + b, c * d);
            }
        }
        out
    }
}

/// Element of the antispherical module in the standard basis `N_x`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AntisphericalVector {
    terms: BTreeMap<WfRep, LaurentPoly>,
}

impl AntisphericalVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(x: WfRep) -> Self {
        let mut n = Self::zero();
        n.add(x, &LaurentPoly::one());
        n
    }

    pub fn add(&mut self, x: WfRep, p: &LaurentPoly) {
        if p.is_zero() {
            return;
        }
        let slot = self.terms.entry(x.clone()).or_default();
        *slot += p;
        if slot.is_zero() {
            self.terms.remove(&x);
        }
    }

    /// `self += p * other`.
    pub fn add_scaled(&mut self, p: &LaurentPoly, other: &AntisphericalVector) {
        for (y, q) in &other.terms {
            self.add(y.clone(), &(p * q));
        }
    }

    pub fn coeff(&self, x: &WfRep) -> LaurentPoly {
        self.terms.get(x).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms sorted by increasing (length, word).
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&WfRep, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &WfRep> {
        self.terms.keys()
    }

    /// The largest element of the support in (length, word) order.
    pub fn leading(&self) -> Option<&WfRep> {
        self.terms.keys().next_back()
    }

    /// `N[x] = N[x] * (1) + N[y] * (v) + ...`, top term first.
    pub fn format_as(&self, name: &WfRep) -> String {
        let body: Vec<String> =
            self.terms.iter().rev().map(|(y, p)| format!("N[{}] * ({p})", y.word_string())).collect();
        format!("N[{}] = {}", name.word_string(), if body.is_empty() { "0".into() } else { body.join(" + ") })
    }
}

/// Element of `N^1`: integer combination of the `N^1_x`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct N1Vector {
    terms: BTreeMap<WfRep, i64>,
}

impl N1Vector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(x: WfRep) -> Self {
        let mut n = Self::zero();
        n.add(x, 1);
        n
    }

    pub fn add(&mut self, x: WfRep, c: i64) {
        if c == 0 {
            return;
        }
        let slot = self.terms.entry(x.clone()).or_insert(0);
        *slot = slot.checked_add(c).expect("N^1 coefficient overflow");
        if *slot == 0 {
            self.terms.remove(&x);
        }
    }

    pub fn add_scaled(&mut self, c: i64, other: &N1Vector) {
        for (y, &d) in &other.terms {
            self.add(y.clone(), c.checked_mul(d).expect("N^1 coefficient overflow"));
        }
    }

    pub fn coeff(&self, x: &WfRep) -> i64 {
        self.terms.get(x).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&WfRep, i64)> {
        self.terms.iter().map(|(x, &c)| (x, c))
    }

    pub fn leading(&self) -> Option<(&WfRep, i64)> {
        self.terms.iter().next_back().map(|(x, &c)| (x, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

impl FromIterator<(WfRep, i64)> for N1Vector {
    fn from_iter<I: IntoIterator<Item = (WfRep, i64)>>(iter: I) -> Self {
        let mut n = N1Vector::zero();
        for (x, c) in iter {
            n.add(x, c);
        }
        n
    }
}

/// `n * Hbar_s`.
pub fn act_hbar_s(group: &AffineGroup, n: &AntisphericalVector, s: usize) -> AntisphericalVector {
    let mut out = AntisphericalVector::zero();
    for (x, p) in n.iter() {
        let xs = group.mul_gen(x.element(), s);
        if !group.is_wf(&xs) {
            continue;
        }
        let up = group.length(&xs) > x.length();
        out.add(group.rep_unchecked(&xs), p);
        out.add(x.clone(), &p.shift(if up { 1 } else { -1 }));
    }
    out
}

/// `beta`: evaluate every coefficient at `v = 1`.
pub fn specialize_v1(n: &AntisphericalVector) -> N1Vector {
    n.iter()
        .map(|(x, p)| (x.clone(), p.eval_at_one().to_i64().expect("N^1 coefficient overflows i64")))
        .collect()
}

/// `N^1_x s = N^1_xs` if `xs` is in `W^f`, else `-N^1_x`.
pub fn n1_act_gen(group: &AffineGroup, n: &N1Vector, s: usize) -> N1Vector {
    let mut out = N1Vector::zero();
    for (x, c) in n.iter() {
        let xs = group.mul_gen(x.element(), s);
        if group.is_wf(&xs) {
            out.add(group.rep_unchecked(&xs), c);
        } else {
            out.add(x.clone(), -c);
        }
    }
    out
}

/// Right action of `w` on `N^1` along a reduced word.
pub fn n1_act(group: &AffineGroup, n: &N1Vector, w: &AffineElement) -> N1Vector {
    n1_act_word(group, n, &group.word(w))
}

pub fn n1_act_word(group: &AffineGroup, n: &N1Vector, word: &[u8]) -> N1Vector {
    word.iter().fold(n.clone(), |acc, &s| n1_act_gen(group, &acc, s as usize))
}

/// Right action of an integer combination of group elements.
pub fn n1_act_combination(group: &AffineGroup, n: &N1Vector, c: &BTreeMap<AffineElement, i64>) -> N1Vector {
    let mut out = N1Vector::zero();
    for (w, &k) in c {
        out.add_scaled(k, &n1_act(group, n, w));
    }
    out
}

/// The Kazhdan–Lusztig basis `Nbar_x`, memoized in memory and optionally on
/// disk.
#[derive(Debug)]
pub struct KlBasis {
    group: Arc<AffineGroup>,
    memo: RwLock<HashMap<WfRep, Arc<AntisphericalVector>>>,
    disk: Option<KlCache>,
}

impl KlBasis {
    pub fn new(group: Arc<AffineGroup>) -> Self {
        KlBasis { group, memo: RwLock::new(HashMap::new()), disk: None }
    }

    pub fn with_cache(group: Arc<AffineGroup>, dir: &Path) -> Result<Self> {
        let disk = KlCache::open(dir, &group.root_system().label())?;
        Ok(KlBasis { group, memo: RwLock::new(HashMap::new()), disk: Some(disk) })
    }

    pub fn group(&self) -> &AffineGroup {
        &self.group
    }

    pub fn group_arc(&self) -> &Arc<AffineGroup> {
        &self.group
    }

    pub fn cache(&self) -> Option<&KlCache> {
        self.disk.as_ref()
    }

    /// `Nbar_x`, computed along the smallest right descent.
    pub fn kl_element(&self, x: &WfRep) -> Result<Arc<AntisphericalVector>> {
        if let Some(n) = self.memo.read().unwrap().get(x) {
            return Ok(n.clone());
        }
        if let Some(disk) = &self.disk {
            if let Some(n) = disk.load(&self.group, x.word()) {
                let n = Arc::new(n);
                self.memo.write().unwrap().insert(x.clone(), n.clone());
                return Ok(n);
            }
        }
        let n = if x.is_identity() {
            AntisphericalVector::basis(x.clone())
        } else {
            let s = self.group.right_descents(x.element())[0];
            self.kl_element_via(x, s)?
        };
        let n = Arc::new(n);
        if let Some(disk) = &self.disk {
            disk.store(x, &n)?;
        }
        self.memo.write().unwrap().insert(x.clone(), n.clone());
        Ok(n)
    }

    /// `Nbar_x` from `Nbar_xs Hbar_s` for a chosen right descent `s`, by
    /// subtracting lower basis elements until every coefficient below `x`
    /// lies in `v Z[v]`.
    pub fn kl_element_via(&self, x: &WfRep, s: usize) -> Result<AntisphericalVector> {
        let g = &*self.group;
        let xs = g.mul_gen(x.element(), s);
        if g.length(&xs) >= x.length() {
            return Err(Error::InvalidArgument(format!("generator {s} is not a right descent of {x}")));
        }
        let lower = self.kl_element(&g.rep_unchecked(&xs))?;
        let mut p = act_hbar_s(g, &lower, s);
        loop {
            let bad = p.iter().rev().find(|(y, q)| *y != x && !q.coeff(0).is_zero()).map(|(y, q)| (y.clone(), q.coeff(0)));
            let Some((y, c)) = bad else { break };
            let ky = self.kl_element(&y)?;
            p.add_scaled(&LaurentPoly::monomial(-c, 0), &ky);
        }
        let top = p.coeff(x);
        if top != LaurentPoly::one() {
            return Err(Error::Invariant(format!("KL element of {x} has top coefficient {top}")));
        }
        if let Some((y, q)) = p.iter().find(|(y, q)| *y != x && !q.is_in_v_zv()) {
            return Err(Error::Invariant(format!("KL element of {x} has coefficient {q} at {y}")));
        }
        Ok(p)
    }

    /// Expansion of `n` in the KL basis, peeling maximal support elements.
    pub fn kl_expand(&self, n: &AntisphericalVector) -> Result<BTreeMap<WfRep, LaurentPoly>> {
        let mut rest = n.clone();
        let mut out = BTreeMap::new();
        while let Some(y) = rest.leading().cloned() {
            let c = rest.coeff(&y);
            let ky = self.kl_element(&y)?;
            rest.add_scaled(&-&c, &ky);
            out.insert(y, c);
        }
        Ok(out)
    }

    /// Coefficient of `v` in the `N_y`-coefficient of `Nbar_x`.
    pub fn mu(&self, y: &WfRep, x: &WfRep) -> Result<BigInt> {
        if y == x {
            return Ok(BigInt::zero());
        }
        Ok(self.kl_element(x)?.coeff(y).coeff(1))
    }

    /// `Nbar^1_x`.
    pub fn kl_element_v1(&self, x: &WfRep) -> Result<N1Vector> {
        Ok(specialize_v1(&*self.kl_element(x)?))
    }

    /// Compute and memoize every element of `elements` in order.
    pub fn precompute(&self, elements: &[WfRep]) -> Result<()> {
        for x in elements {
            self.kl_element(x)?;
        }
        Ok(())
    }
}

const CACHE_MAGIC: &str = "tiltcell-kl 1";

/// On-disk store of KL elements keyed by root system and element word.
///
/// One file per element at `<dir>/<TYPE>/<word>.kl`: a header line
/// `tiltcell-kl 1 <TYPE> <word>` followed by one sorted line per support
/// element, `word<TAB>exp:coef,...`. Files are written to a temporary name
/// and renamed into place.
#[derive(Debug, Clone)]
pub struct KlCache {
    dir: PathBuf,
    label: String,
}

/// Outcome of a cache verification pass.
#[derive(Debug, Clone, Default, serde::Serialize)]
pub struct VerifyReport {
    pub entries: usize,
    pub checked: usize,
    pub matched: usize,
    pub evicted: Vec<String>,
}

impl KlCache {
    pub fn open(root: &Path, label: &str) -> Result<Self> {
        let dir = root.join(label);
        fs::create_dir_all(&dir)?;
        Ok(KlCache { dir, label: label.to_string() })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, word: &[u8]) -> PathBuf {
        self.dir.join(format!("{}.kl", word_string(word)))
    }

    pub fn encode(&self, x: &WfRep, n: &AntisphericalVector) -> String {
        let mut s = format!("{CACHE_MAGIC} {} {}\n", self.label, x.word_string());
        for (y, p) in n.iter() {
            s.push_str(&format!("{}\t{}\n", y.word_string(), p.encode_terms()));
        }
        s
    }

    fn decode(&self, group: &AffineGroup, word: &[u8], text: &str) -> Option<AntisphericalVector> {
        let mut lines = text.lines();
        let header = lines.next()?;
        if header != format!("{CACHE_MAGIC} {} {}", self.label, word_string(word)) {
            return None;
        }
        let mut n = AntisphericalVector::zero();
        for line in lines {
            let (w, terms) = line.split_once('\t')?;
            let letters = parse_word(w, group.num_generators())?;
            let el = group.from_word(&letters);
            if !group.is_wf(&el) || *group.word(&el) != letters[..] {
                return None;
            }
            n.add(group.rep_unchecked(&el), &LaurentPoly::parse_terms(terms)?);
        }
        Some(n)
    }

    /// Read an entry; unreadable or malformed entries are evicted.
    pub fn load(&self, group: &AffineGroup, word: &[u8]) -> Option<AntisphericalVector> {
        let path = self.path(word);
        let text = fs::read_to_string(&path).ok()?;
        match self.decode(group, word, &text) {
            Some(n) => Some(n),
            None => {
                warn!("evicting malformed cache entry {}", path.display());
                let _ = fs::remove_file(&path);
                None
            }
        }
    }

    pub fn store(&self, x: &WfRep, n: &AntisphericalVector) -> Result<()> {
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        tmp.write_all(self.encode(x, n).as_bytes())?;
        tmp.persist(self.path(x.word())).map_err(|e| Error::Cache(e.to_string()))?;
        debug!("cached KL element {x}");
        Ok(())
    }

    /// Words of all cached entries, sorted by (length, word).
    pub fn list(&self) -> Result<Vec<String>> {
        let mut out = Vec::new();
        for entry in fs::read_dir(&self.dir)? {
            let name = entry?.file_name().to_string_lossy().into_owned();
            if let Some(stem) = name.strip_suffix(".kl") {
                out.push(stem.to_string());
            }
        }
        out.sort_by(|a, b| {
            let la = if a == "e" { 0 } else { a.len() };
            let lb = if b == "e" { 0 } else { b.len() };
            (la, a).cmp(&(lb, b))
        });
        Ok(out)
    }

    pub fn clear(&self) -> Result<usize> {
        let names = self.list()?;
        for n in &names {
            fs::remove_file(self.dir.join(format!("{n}.kl")))?;
        }
        Ok(names.len())
    }

    /// Recompute a seeded random sample of entries (at least one when the
    /// cache is nonempty) and compare byte for byte; mismatches are evicted.
    pub fn verify(&self, group: Arc<AffineGroup>, fraction: f64, seed: u64) -> Result<VerifyReport> {
        let names = self.list()?;
        let mut report = VerifyReport { entries: names.len(), ..Default::default() };
        let mut sample = names.clone();
        sample.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let k = if names.is_empty() { 0 } else { ((names.len() as f64 * fraction).ceil() as usize).max(1) };
        sample.truncate(k);
        sample.sort();
        let fresh = KlBasis::new(group.clone());
        for name in sample {
            report.checked += 1;
            let path = self.dir.join(format!("{name}.kl"));
            let stored = fs::read_to_string(&path).unwrap_or_default();
            let ok = parse_word(&name, group.num_generators())
                .map(|w| group.from_word(&w))
                .filter(|el| group.is_wf(el) && group.word(el).len() == if name == "e" { 0 } else { name.len() })
                .map(|el| {
                    let x = group.rep_unchecked(&el);
                    fresh.kl_element(&x).map(|n| self.encode(&x, &n) == stored).unwrap_or(false)
                })
                .unwrap_or(false);
            if ok {
                report.matched += 1;
            } else {
                warn!("cache entry {name} does not match a fresh computation; evicting");
                let _ = fs::remove_file(&path);
                report.evicted.push(name);
            }
        }
        Ok(report)
    }
}

/// Parse a word written as generator digits (`e` for the identity).
pub fn parse_word(s: &str, generators: usize) -> Option<Vec<u8>> {
    if s == "e" || s.is_empty() {
        return Some(Vec::new());
    }
    s.chars()
        .map(|c| c.to_digit(10).filter(|&d| (d as usize) < generators).map(|d| d as u8))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::RootSystem;

    fn group(t: &str, l: i64) -> Arc<AffineGroup> {
        Arc::new(AffineGroup::new(Arc::new(RootSystem::parse(t).unwrap()), l).unwrap())
    }

    fn rep(g: &AffineGroup, w: &[u8]) -> WfRep {
        g.wf_rep(&g.from_word(w)).unwrap()
    }

    #[test]
    fn polynomial_arithmetic() {
        let v = LaurentPoly::v();
        let vi = LaurentPoly::monomial(1, -1);
        let p = &v - &vi;
        assert_eq!(p.eval_at_one(), BigInt::zero());
        assert_eq!((&p * &p).to_string(), "v^-2 - 2 + v^2");
        assert!((&p - &p).is_zero());
        assert_eq!(LaurentPoly::parse_terms("-1:3,2:-1").unwrap().to_string(), "3v^-1 - v^2");
    }

    #[test]
    fn action_rules() {
        let g = group("A1", 5);
        let e = g.identity_rep();
        let s0 = rep(&g, &[0]);
        let ne = AntisphericalVector::basis(e.clone());
        let mut expect = AntisphericalVector::basis(s0.clone());
        expect.add(e.clone(), &LaurentPoly::v());
        assert_eq!(act_hbar_s(&g, &ne, 0), expect);
        assert!(act_hbar_s(&g, &ne, 1).is_zero());
        let mut expect = AntisphericalVector::basis(e.clone());
        expect.add(s0.clone(), &LaurentPoly::monomial(1, -1));
        assert_eq!(act_hbar_s(&g, &AntisphericalVector::basis(s0), 0), expect);
    }

    #[test]
    fn small_kl_elements() {
        let g = group("A1", 5);
        let kl = KlBasis::new(g.clone());
        let e = g.identity_rep();
        let s0 = rep(&g, &[0]);
        let s01 = rep(&g, &[0, 1]);
        assert_eq!(*kl.kl_element(&e).unwrap(), AntisphericalVector::basis(e.clone()));
        let n = kl.kl_element(&s0).unwrap();
        assert_eq!(n.coeff(&e), LaurentPoly::v());
        let n = kl.kl_element(&s01).unwrap();
        assert_eq!(n.len(), 2);
        assert_eq!(n.coeff(&s0), LaurentPoly::v());
        assert_eq!(kl.mu(&e, &s0).unwrap(), BigInt::one());
        assert_eq!(kl.mu(&s0, &s0).unwrap(), BigInt::zero());
        assert_eq!(kl.mu(&s0, &s01).unwrap(), BigInt::one());
        assert_eq!(n.format_as(&s01), "N[01] = N[01] * (1) + N[0] * (v)");
    }

    #[test]
    fn specialization() {
        let g = group("A1", 5);
        let kl = KlBasis::new(g.clone());
        let e = g.identity_rep();
        let s0 = rep(&g, &[0]);
        let n1 = kl.kl_element_v1(&s0).unwrap();
        assert_eq!(n1, N1Vector::from_iter([(s0.clone(), 1), (e.clone(), 1)]));
        assert!(specialize_v1(&AntisphericalVector::zero()).is_zero());
        let mut n = AntisphericalVector::zero();
        n.add(s0, &(&LaurentPoly::v() - &LaurentPoly::monomial(1, -1)));
        assert!(specialize_v1(&n).is_zero());
    }

    #[test]
    fn n1_generator_rules() {
        let g = group("A1", 5);
        let e = g.identity_rep();
        let s0 = rep(&g, &[0]);
        let ne = N1Vector::basis(e.clone());
        assert_eq!(n1_act_gen(&g, &ne, 1), N1Vector::from_iter([(e.clone(), -1)]));
        assert_eq!(n1_act_gen(&g, &ne, 0), N1Vector::basis(s0.clone()));
        assert_eq!(n1_act(&g, &N1Vector::basis(s0), &g.generator(0)), ne);
    }

    #[test]
    fn descent_choice_agrees_in_g2() {
        let g = group("G2", 7);
        let kl = KlBasis::new(g.clone());
        for x in g.ball(8) {
            let d = g.right_descents(x.element());
            let first = kl.kl_element(&x).unwrap();
            for &s in d.iter().skip(1) {
                assert_eq!(kl.kl_element_via(&x, s).unwrap(), *first, "x = {x}, s = {s}");
            }
        }
    }

    #[test]
    fn disk_cache_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let g = group("G2", 7);
        let kl = KlBasis::with_cache(g.clone(), dir.path()).unwrap();
        let ball = g.ball(5);
        kl.precompute(&ball).unwrap();
        let cache = kl.cache().unwrap();
        assert_eq!(cache.list().unwrap().len(), ball.len());
        let again = KlBasis::with_cache(g.clone(), dir.path()).unwrap();
        for x in &ball {
            assert_eq!(again.kl_element(x).unwrap(), kl.kl_element(x).unwrap());
        }
        let report = cache.verify(g, 1.0, 7).unwrap();
        assert_eq!((report.checked, report.matched), (ball.len(), ball.len()));
        assert_eq!(cache.clear().unwrap(), ball.len());
        assert!(cache.list().unwrap().is_empty());
    }
}
