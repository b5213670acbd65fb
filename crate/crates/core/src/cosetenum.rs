//! Todd–Coxeter enumeration over the trivial subgroup.
//!
//! The strategy is HLT: every live coset in turn has all relators scanned
//! and filled, then its missing entries defined. When the table is full a
//! lookahead pass scans without defining, and the table is compacted. The
//! result is deterministic for a fixed presentation and bound.

use std::fmt;

use serde::Serialize;

use crate::group::{FinGroup, GroupElement};
use crate::word::{Word, WordError};

pub const DEFAULT_MAX_COSETS: usize = 10_000;

/// The enumeration bound, overridable through `PA_MAX_COSETS`.
pub fn default_max_cosets() -> usize {
    std::env::var("PA_MAX_COSETS")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .filter(|&n: &usize| n >= 1)
        .unwrap_or(DEFAULT_MAX_COSETS)
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CosetError {
    #[error(transparent)]
    Word(#[from] WordError),
    #[error("coset enumeration exceeded {max} cosets")]
    Overflow { max: usize },
    #[error("max_cosets must be at least 1")]
    ZeroBound,
    #[error("triangle group ({0},{1},{2}) is not spherical")]
    NotSpherical(u32, u32, u32),
    #[error("({0},{1},{2}) is not a quotient signature of ({3},{4},{5})")]
    NotQuotient(u32, u32, u32, u32, u32, u32),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub ngens: usize,
    pub relators: Vec<Word>,
}

impl Presentation {
    /// Relators are freely reduced; empty ones are dropped.
    pub fn new(ngens: usize, relators: Vec<Word>) -> Result<Self, WordError> {
        for r in &relators {
            if r.max_generator() > ngens {
                let letter = (b'a' + r.max_generator() as u8 - 1) as char;
                return Err(WordError::Alphabet { letter, ngens });
            }
        }
        let relators = relators.iter().map(Word::freely_reduced).filter(|r| !r.is_empty()).collect();
        Ok(Presentation { ngens, relators })
    }

    pub fn parse(ngens: usize, relators: &[&str]) -> Result<Self, WordError> {
        let ws = relators.iter().map(|r| Word::parse(r, ngens)).collect::<Result<Vec<_>, _>>()?;
        Self::new(ngens, ws)
    }

    /// `⟨a,b,c | aᵖ, b^q, cʳ, abc⟩`.
    pub fn triangle(p: u32, q: u32, r: u32) -> Self {
        let pw = |g: i32, n: u32| Word(vec![g; n as usize]);
        Self::new(3, vec![pw(1, p), pw(2, q), pw(3, r), Word(vec![1, 2, 3])]).expect("three generators")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TableStatus {
    Complete,
    Overflow,
}

/// Rows indexed by coset; columns `2k` and `2k+1` hold generator `k+1` and its inverse.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CosetTable {
    pub ngens: usize,
    pub rows: Vec<Vec<Option<usize>>>,
    pub status: TableStatus,
}

fn column(x: i32) -> usize {
    2 * (x.unsigned_abs() as usize - 1) + usize::from(x < 0)
}

impl CosetTable {
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_complete(&self) -> bool {
        self.status == TableStatus::Complete
    }

    /// `coset · x` for a letter `x`.
    pub fn act(&self, coset: usize, x: i32) -> Option<usize> {
        self.rows.get(coset)?[column(x)]
    }

    pub fn act_word(&self, coset: usize, w: &Word) -> Option<usize> {
        w.letters().iter().try_fold(coset, |c, &x| self.act(c, x))
    }

    /// Every relator fixes every coset.
    pub fn relators_hold(&self, p: &Presentation) -> bool {
        self.is_complete()
            && (0..self.len()).all(|c| p.relators.iter().all(|r| self.act_word(c, r) == Some(c)))
    }

    /// Generator permutations of a complete table.
    pub fn permutations(&self) -> Option<Vec<Perm>> {
        if !self.is_complete() {
            return None;
        }
        (1..=self.ngens as i32)
            .map(|g| (0..self.len()).map(|c| self.act(c, g).map(|d| d as u32)).collect::<Option<Vec<_>>>().map(Perm))
            .collect()
    }
}

const NONE: usize = usize::MAX;

struct Enumerator<'a> {
    relators: &'a [Vec<usize>],
    width: usize,
    table: Vec<Vec<usize>>,
    parent: Vec<usize>,
    queue: Vec<usize>,
    max: usize,
    full: bool,
}

impl Enumerator<'_> {
    fn rep(&mut self, mut k: usize) -> usize {
        let mut root = k;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        while self.parent[k] != root {
            let next = self.parent[k];
            self.parent[k] = root;
            k = next;
        }
        root
    }

    fn alive(&self, k: usize) -> bool {
        self.parent[k] == k
    }

    fn define(&mut self, alpha: usize, x: usize) {
        if self.table.len() >= self.max {
            self.full = true;
            return;
        }
        let beta = self.table.len();
        self.table.push(vec![NONE; self.width]);
        self.parent.push(beta);
        self.table[alpha][x] = beta;
        self.table[beta][x ^ 1] = alpha;
    }

    fn merge(&mut self, k: usize, l: usize) {
        let (a, b) = (self.rep(k), self.rep(l));
        if a != b {
            let (lo, hi) = (a.min(b), a.max(b));
            self.parent[hi] = lo;
            self.queue.push(hi);
        }
    }

    fn coincidence(&mut self, alpha: usize, beta: usize) {
        self.queue.clear();
        self.merge(alpha, beta);
        let mut i = 0;
        while i < self.queue.len() {
            let gamma = self.queue[i];
            i += 1;
            for x in 0..self.width {
                let delta = self.table[gamma][x];
                if delta == NONE {
                    continue;
                }
                self.table[delta][x ^ 1] = NONE;
                let mu = self.rep(gamma);
                let nu = self.rep(delta);
                if self.table[mu][x] != NONE {
                    let t = self.table[mu][x];
                    self.merge(nu, t);
                } else if self.table[nu][x ^ 1] != NONE {
                    let t = self.table[nu][x ^ 1];
                    self.merge(mu, t);
                } else {
                    self.table[mu][x] = nu;
                    self.table[nu][x ^ 1] = mu;
                }
            }
        }
    }

    /// Scans `w` at `alpha`; with `fill`, undefined gaps get new cosets.
    fn scan(&mut self, alpha: usize, w: &[usize], fill: bool) {
        let (mut f, mut b) = (alpha, alpha);
        let mut i = 0usize;
        let mut j = w.len() as isize - 1;
        loop {
            while (i as isize) <= j && self.table[f][w[i]] != NONE {
                f = self.table[f][w[i]];
                i += 1;
            }
            if i as isize > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return;
            }
            while j >= i as isize && self.table[b][w[j as usize] ^ 1] != NONE {
                b = self.table[b][w[j as usize] ^ 1];
                j -= 1;
            }
            if j < i as isize {
                self.coincidence(f, b);
                return;
            } else if j == i as isize {
                self.table[f][w[i]] = b;
                self.table[b][w[i] ^ 1] = f;
                return;
            } else if fill {
                self.define(f, w[i]);
                if self.full {
                    return;
                }
            } else {
                return;
            }
        }
    }

    fn lookahead(&mut self) {
        let relators = self.relators;
        let mut beta = 0;
        while beta < self.table.len() {
            for w in relators {
                if !self.alive(beta) {
                    break;
                }
                self.scan(beta, w, false);
            }
            beta += 1;
        }
    }

    /// Renumbers live cosets consecutively; returns the new index of `alpha`.
    fn compact(&mut self, alpha: usize) -> usize {
        let mut new_index = vec![NONE; self.table.len()];
        let mut next = 0;
        for (k, slot) in new_index.iter_mut().enumerate() {
            if self.parent[k] == k {
                *slot = next;
                next += 1;
            }
        }
        let old = std::mem::take(&mut self.table);
        self.table = old
            .into_iter()
            .enumerate()
            .filter(|(k, _)| new_index[*k] != NONE)
            .map(|(_, row)| row.into_iter().map(|d| if d == NONE { NONE } else { new_index[d] }).collect())
            .collect();
        self.parent = (0..next).collect();
        // alpha may have died: resume at the next live coset
        (alpha..new_index.len()).map(|k| new_index[k]).find(|&k| k != NONE).unwrap_or(next)
    }
}

/// Enumerates the cosets of the trivial subgroup.
pub fn enumerate(p: &Presentation, max_cosets: usize) -> Result<CosetTable, CosetError> {
    if max_cosets == 0 {
        return Err(CosetError::ZeroBound);
    }
    let relators: Vec<Vec<usize>> =
        p.relators.iter().map(|r| r.letters().iter().map(|&x| column(x)).collect()).collect();
    let width = 2 * p.ngens;
    let mut e = Enumerator {
        relators: &relators,
        width,
        table: vec![vec![NONE; width]],
        parent: vec![0],
        queue: Vec::new(),
        max: max_cosets,
        full: false,
    };
    let mut alpha = 0;
    let mut overflow = false;
    while alpha < e.table.len() {
        if e.alive(alpha) {
            for w in &relators {
                if !e.alive(alpha) || e.full {
                    break;
                }
                e.scan(alpha, w, true);
            }
            for x in 0..width {
                if !e.alive(alpha) || e.full {
                    break;
                }
                if e.table[alpha][x] == NONE {
                    e.define(alpha, x);
                }
            }
            if e.full {
                e.full = false;
                e.lookahead();
                let live = (0..e.table.len()).filter(|&k| e.alive(k)).count();
                alpha = e.compact(alpha);
                if live >= max_cosets {
                    overflow = true;
                    break;
                }
                continue;
            }
        }
        alpha += 1;
    }
    if !overflow {
        e.compact(0);
    }
    let rows = e.table.iter().map(|row| row.iter().map(|&d| (d != NONE).then_some(d)).collect()).collect();
    Ok(CosetTable {
        ngens: p.ngens,
        rows,
        status: if overflow { TableStatus::Overflow } else { TableStatus::Complete },
    })
}

/// A permutation acting on the right: `(g·h)[c] = h[g[c]]`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm(pub Vec<u32>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n as u32).collect())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }
}

impl GroupElement for Perm {
    fn mul(&self, other: &Self) -> Self {
        Perm(self.0.iter().map(|&c| other.0[c as usize]).collect())
    }

    fn inv(&self) -> Self {
        let mut v = vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            v[j as usize] = i as u32;
        }
        Perm(v)
    }

    fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.0.len()];
        let mut any = false;
        for start in 0..self.0.len() {
            if seen[start] || self.0[start] as usize == start {
                continue;
            }
            any = true;
            let mut c = start;
            f.write_str("(")?;
            loop {
                seen[c] = true;
                write!(f, "{c}")?;
                c = self.0[c] as usize;
                if c == start {
                    break;
                }
                f.write_str(" ")?;
            }
            f.write_str(")")?;
        }
        if !any {
            f.write_str("()")?;
        }
        Ok(())
    }
}

pub fn is_spherical(p: u32, q: u32, r: u32) -> bool {
    let (p, q, r) = (p as u64, q as u64, r as u64);
    p > 0 && q > 0 && r > 0 && q * r + p * r + p * q > p * q * r
}

/// The regular permutation model of `⟨a,b,c | aᵖ, b^q, cʳ, abc⟩`.
#[derive(Debug, Clone)]
pub struct TriangleGroup {
    pub signature: (u32, u32, u32),
    pub generators: [Perm; 3],
    pub group: FinGroup<Perm>,
}

impl TriangleGroup {
    pub fn order(&self) -> usize {
        self.group.order()
    }

    /// Image of a word, letters applied left to right.
    pub fn evaluate(&self, w: &Word) -> Perm {
        let n = self.generators[0].degree();
        w.letters().iter().fold(Perm::identity(n), |acc, &x| {
            let g = &self.generators[x.unsigned_abs() as usize - 1];
            acc.mul(&if x > 0 { g.clone() } else { g.inv() })
        })
    }

    pub fn evaluate_str(&self, w: &str) -> Result<Perm, WordError> {
        Ok(self.evaluate(&Word::parse(w, 3)?))
    }

    pub fn element_order(&self, g: &Perm) -> usize {
        self.group.element_order(g)
    }

    pub fn are_conjugate(&self, g: &Perm, h: &Perm) -> bool {
        are_conjugate(&self.group, g, h)
    }
}

pub fn triangle_group(p: u32, q: u32, r: u32) -> Result<TriangleGroup, CosetError> {
    triangle_group_bounded(p, q, r, default_max_cosets())
}

pub fn triangle_group_bounded(p: u32, q: u32, r: u32, max_cosets: usize) -> Result<TriangleGroup, CosetError> {
    if !is_spherical(p, q, r) {
        return Err(CosetError::NotSpherical(p, q, r));
    }
    let table = enumerate(&Presentation::triangle(p, q, r), max_cosets)?;
    let perms = table.permutations().ok_or(CosetError::Overflow { max: max_cosets })?;
    let n = table.len();
    let group = FinGroup::close(&perms, Perm::identity(n), n).expect("regular action closes on its cosets");
    let [a, b, c]: [Perm; 3] = perms.try_into().expect("three generators");
    Ok(TriangleGroup { signature: (p, q, r), generators: [a, b, c], group })
}

/// Order of the image of `word` under `a↦a, b↦b, c↦c` from `source` onto `target`.
pub fn image_order(word: &Word, source: (u32, u32, u32), target: (u32, u32, u32)) -> Result<usize, CosetError> {
    let (p, q, r) = source;
    let (p2, q2, r2) = target;
    if p2 == 0 || q2 == 0 || r2 == 0 || p % p2 != 0 || q % q2 != 0 || r % r2 != 0 {
        return Err(CosetError::NotQuotient(p2, q2, r2, p, q, r));
    }
    if word.max_generator() > 3 {
        let letter = (b'a' + word.max_generator() as u8 - 1) as char;
        return Err(WordError::Alphabet { letter, ngens: 3 }.into());
    }
    let g = triangle_group(p2, q2, r2)?;
    Ok(g.element_order(&g.evaluate(word)))
}

/// Brute-force conjugacy in a finite group.
pub fn are_conjugate<T: GroupElement>(g: &FinGroup<T>, x: &T, y: &T) -> bool {
    g.are_conjugate(x, y)
}
