//! Symmetric-group combinatorics: permutations in one-line notation, codes,
//! reduced words, and the extended Ehresman-Bruhat order with its weighted
//! colored arrows and paths.
//!
//! Conventions, fixed once and validated against the polynomial identities
//! elsewhere in the crate:
//!   * composition `(u*v)(i) = u(v(i))`;
//!   * a word `(a1,...,ap)` denotes `s_{a1} * s_{a2} * ... * s_{ap}`;
//!   * `w.mul_transposition(i, j)` swaps the *values in positions* i and j
//!     of the one-line word, i.e. right multiplication by t_{ij}.

use std::fmt;

use crate::error::{Error, Result};
use crate::polyring::{Monomial, Poly, VarId};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    one_line: Vec<u32>,
}

impl Permutation {
    pub fn identity(n: u32) -> Self {
        Permutation { one_line: (1..=n).collect() }
    }

    pub fn longest(n: u32) -> Self {
        Permutation { one_line: (1..=n).rev().collect() }
    }

    pub fn from_one_line(word: Vec<u32>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n];
        for &v in &word {
            if v == 0 || v as usize > n || seen[(v - 1) as usize] {
                return Err(Error::InvalidPermutation(format!("{word:?} is not a permutation")));
            }
            seen[(v - 1) as usize] = true;
        }
        Ok(Permutation { one_line: word })
    }

    /// Simple transposition s_i in S_n.
    pub fn simple(i: u32, n: u32) -> Self {
        assert!(i >= 1 && i < n);
        let mut w = Permutation::identity(n);
        w.one_line.swap((i - 1) as usize, i as usize);
        w
    }

    /// Transposition t_{ij} in S_n (i < j).
    pub fn transposition(i: u32, j: u32, n: u32) -> Self {
        assert!(i >= 1 && i < j && j <= n);
        let mut w = Permutation::identity(n);
        w.one_line.swap((i - 1) as usize, (j - 1) as usize);
        w
    }

    /// Product of simple reflections along the word, leftmost outermost:
    /// `from_word(&[2,1], n)` is s_2 * s_1.
    pub fn from_word(word: &[u32], n: u32) -> Self {
        let mut w = Permutation::identity(n);
        for &a in word.iter().rev() {
            w = Permutation::simple(a, n).compose(&w);
        }
        w
    }

    pub fn n(&self) -> u32 {
        self.one_line.len() as u32
    }

    pub fn one_line(&self) -> &[u32] {
        &self.one_line
    }

    /// w(i), 1-based.
    pub fn apply(&self, i: u32) -> u32 {
        self.one_line[(i - 1) as usize]
    }

    /// (self * other)(i) = self(other(i)).
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n());
        Permutation {
            one_line: other.one_line.iter().map(|&i| self.apply(i)).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut out = vec![0; self.one_line.len()];
        for (pos, &val) in self.one_line.iter().enumerate() {
            out[(val - 1) as usize] = pos as u32 + 1;
        }
        Permutation { one_line: out }
    }

    pub fn is_identity(&self) -> bool {
        self.one_line.iter().enumerate().all(|(k, &v)| v == k as u32 + 1)
    }

    /// Inversion count.
    pub fn length(&self) -> u32 {
        let w = &self.one_line;
        let mut l = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    l += 1;
                }
            }
        }
        l
    }

    /// Right multiplication by t_{ij}: swap values in positions i and j.
    pub fn mul_transposition(&self, i: u32, j: u32) -> Permutation {
        let mut out = self.clone();
        out.one_line.swap((i - 1) as usize, (j - 1) as usize);
        out
    }

    /// The code: c_i = #{ j > i : w(i) > w(j) }.
    pub fn code(&self) -> Code {
        let w = &self.one_line;
        let mut c = vec![0u32; w.len()];
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    c[i] += 1;
                }
            }
        }
        Code(c)
    }

    /// Embeds into S_m for m >= n by fixing the new letters.
    pub fn embed(&self, m: u32) -> Permutation {
        assert!(m >= self.n());
        let mut w = self.one_line.clone();
        w.extend(self.n() + 1..=m);
        Permutation { one_line: w }
    }

    /// Restricts to S_m when the permutation fixes all letters beyond m.
    pub fn restrict(&self, m: u32) -> Option<Permutation> {
        for i in m + 1..=self.n() {
            if self.apply(i) != i {
                return None;
            }
        }
        Some(Permutation { one_line: self.one_line[..m as usize].to_vec() })
    }

    /// i is a left descent iff l(s_i * w) < l(w), iff w^{-1}(i) > w^{-1}(i+1).
    pub fn is_left_descent(&self, i: u32) -> bool {
        let inv = self.inverse();
        inv.apply(i) > inv.apply(i + 1)
    }

    /// Lexicographically smallest reduced word, by greedily choosing the
    /// smallest left descent.
    pub fn reduced_word(&self) -> Vec<u32> {
        let mut w = self.clone();
        let mut word = Vec::with_capacity(self.length() as usize);
        'outer: while !w.is_identity() {
            for i in 1..w.n() {
                if w.is_left_descent(i) {
                    word.push(i);
                    w = Permutation::simple(i, w.n()).compose(&w);
                    continue 'outer;
                }
            }
            unreachable!("non-identity permutation without a descent");
        }
        word
    }

    /// All permutations of S_n, in lexicographic one-line order.
    pub fn all(n: u32) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut current: Vec<u32> = (1..=n).collect();
        loop {
            out.push(Permutation { one_line: current.clone() });
            // next lexicographic permutation
            let mut i = current.len().wrapping_sub(1);
            while i > 0 && current[i - 1] >= current[i] {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            let mut j = current.len() - 1;
            while current[j] <= current[i - 1] {
                j -= 1;
            }
            current.swap(i - 1, j);
            current[i..].reverse();
        }
        out
    }

    /// Parses "2431" (digits, n <= 9) or "2,4,3,1".
    pub fn parse_one_line(s: &str) -> Result<Permutation> {
        let word: Vec<u32> = if s.contains(',') {
            s.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<u32>()
                        .map_err(|_| Error::InvalidPermutation(format!("bad entry {t:?}")))
                })
                .collect::<Result<_>>()?
        } else {
            s.trim()
                .chars()
                .map(|c| {
                    c.to_digit(10)
                        .ok_or_else(|| Error::InvalidPermutation(format!("bad character {c:?}")))
                })
                .collect::<Result<_>>()?
        };
        Permutation::from_one_line(word)
    }

    /// Parses a reduced-word label like "121321" (or comma-separated), in
    /// the ambient S_n.
    pub fn parse_word(s: &str, n: u32) -> Result<Permutation> {
        let s = s.trim();
        if s == "id" {
            return Ok(Permutation::identity(n));
        }
        let letters: Vec<u32> = if s.contains(',') {
            s.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<u32>()
                        .map_err(|_| Error::InvalidPermutation(format!("bad letter {t:?}")))
                })
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .ok_or_else(|| Error::InvalidPermutation(format!("bad letter {c:?}")))
                })
                .collect::<Result<_>>()?
        };
        for &a in &letters {
            if a == 0 || a >= n {
                return Err(Error::InvalidPermutation(format!(
                    "letter {a} out of range for S_{n}"
                )));
            }
        }
        Ok(Permutation::from_word(&letters, n))
    }

    /// One-line serialization: digits for n <= 9, comma-separated beyond.
    pub fn to_one_line_string(&self) -> String {
        if self.n() <= 9 {
            self.one_line.iter().map(|v| v.to_string()).collect()
        } else {
            self.one_line
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(",")
        }
    }

    /// Reduced-word label, "id" for the identity.
    pub fn word_label(&self) -> String {
        if self.is_identity() {
            "id".to_string()
        } else {
            self.reduced_word().iter().map(|a| a.to_string()).collect()
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_one_line_string())
    }
}

/// The code of a permutation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Code(pub Vec<u32>);

impl Code {
    pub fn sum(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn perm(&self) -> Result<Permutation> {
        let n = self.0.len() as u32;
        for (k, &c) in self.0.iter().enumerate() {
            let max = n - 1 - k as u32;
            if c > max {
                return Err(Error::InvalidCode { pos: k + 1, val: c, max });
            }
        }
        // standard reconstruction: pick the (c_i+1)-th smallest remaining value
        let mut remaining: Vec<u32> = (1..=n).collect();
        let mut out = Vec::with_capacity(n as usize);
        for &c in &self.0 {
            out.push(remaining.remove(c as usize));
        }
        Ok(Permutation { one_line: out })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArrowDirection {
    Up,
    Down,
}

/// One arrow of the extended Ehresman-Bruhat order, from `from` to
/// `to = from * t_{ij}`.
///
/// Up: l(to) = l(from) + 1, weight 1.
/// Down: l(from) = l(to) + l(t_{ij}), weight q_i ... q_{j-1}.
/// The arrow has color k iff i <= k < j.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BEArrow {
    pub from: Permutation,
    pub to: Permutation,
    pub i: u32,
    pub j: u32,
    pub direction: ArrowDirection,
}

impl BEArrow {
    pub fn has_color(&self, k: u32) -> bool {
        self.i <= k && k < self.j
    }

    /// q_i q_{i+1} ... q_{j-1} for Down arrows, 1 for Up arrows.
    pub fn weight_monomial(&self) -> Monomial {
        match self.direction {
            ArrowDirection::Up => Monomial::one(),
            ArrowDirection::Down => {
                let mut m = Monomial::one();
                for k in self.i..self.j {
                    m = m.mul(&Monomial::var(VarId::q(k)));
                }
                m
            }
        }
    }

    pub fn weight_poly(&self, n: u32) -> Poly {
        Poly::monomial(n, self.weight_monomial(), crate::polyring::coeff_int(1))
    }
}

/// Down-arrow test via the length condition:
/// v <- v*t_{ij} holds iff l(v t_{ij}) >= l(v) + l(t_{ij}).
fn down_by_length(v: &Permutation, i: u32, j: u32) -> bool {
    let w = v.mul_transposition(i, j);
    let lt = 2 * (j - i) - 1;
    w.length() >= v.length() + lt
}

/// Down-arrow test via the value condition: v(i) < v(j) and every value in
/// between lies strictly between them.
fn down_by_values(v: &Permutation, i: u32, j: u32) -> bool {
    let a = v.apply(i);
    let b = v.apply(j);
    if a >= b {
        return false;
    }
    (i + 1..j).all(|k| {
        let c = v.apply(k);
        a < c && c < b
    })
}

/// All extended Ehresman-Bruhat arrows out of `v`, optionally filtered by
/// color and direction. Both formulations of the Down condition are
/// evaluated and must agree.
pub fn extended_arrows(
    v: &Permutation,
    color: Option<u32>,
    direction: Option<ArrowDirection>,
) -> Vec<BEArrow> {
    let n = v.n();
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            if let Some(k) = color {
                if !(i <= k && k < j) {
                    continue;
                }
            }
            let w = v.mul_transposition(i, j);
            if w.length() == v.length() + 1
                && direction != Some(ArrowDirection::Down)
            {
                out.push(BEArrow {
                    from: v.clone(),
                    to: w.clone(),
                    i,
                    j,
                    direction: ArrowDirection::Up,
                });
            }
            // Down step from v: the target u = v*t_{ij} satisfies u <- v.
            let u = v.mul_transposition(i, j);
            let by_len = down_by_length(&u, i, j);
            let by_val = down_by_values(&u, i, j);
            debug_assert_eq!(by_len, by_val, "down-arrow conditions disagree at v={v}, t_{{{i},{j}}}");
            if by_len && by_val && direction != Some(ArrowDirection::Up) {
                // check it is a genuine descent from v
                if v.length() == u.length() + 2 * (j - i) - 1 {
                    out.push(BEArrow {
                        from: v.clone(),
                        to: u,
                        i,
                        j,
                        direction: ArrowDirection::Down,
                    });
                }
            }
        }
    }
    out
}

/// A path in the extended order; consecutive arrows compose.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BEPath {
    pub arrows: Vec<BEArrow>,
}

impl BEPath {
    pub fn start(&self) -> Option<&Permutation> {
        self.arrows.first().map(|a| &a.from)
    }

    pub fn end(&self) -> Option<&Permutation> {
        self.arrows.last().map(|a| &a.to)
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn weight_monomial(&self) -> Monomial {
        let mut m = Monomial::one();
        for a in &self.arrows {
            m = m.mul(&a.weight_monomial());
        }
        m
    }
}

/// All color-`color` BE-paths from `v` with exactly `length` arrows. With
/// `distinct_i_rule`, the smaller indices i of the step transpositions must
/// be pairwise distinct along the path.
pub fn be_paths(v: &Permutation, color: u32, length: usize, distinct_i_rule: bool) -> Vec<BEPath> {
    let mut out = Vec::new();
    let mut prefix: Vec<BEArrow> = Vec::new();
    fn recurse(
        current: &Permutation,
        color: u32,
        remaining: usize,
        distinct: bool,
        prefix: &mut Vec<BEArrow>,
        out: &mut Vec<BEPath>,
    ) {
        if remaining == 0 {
            out.push(BEPath { arrows: prefix.clone() });
            return;
        }
        for arrow in extended_arrows(current, Some(color), None) {
            if distinct && prefix.iter().any(|a| a.i == arrow.i) {
                continue;
            }
            prefix.push(arrow.clone());
            recurse(&arrow.to, color, remaining - 1, distinct, prefix, out);
            prefix.pop();
        }
    }
    recurse(v, color, length, distinct_i_rule, &mut prefix, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn perm(s: &str) -> Permutation {
        Permutation::parse_one_line(s).unwrap()
    }

    #[test]
    fn codes_round_trip() {
        assert_eq!(Permutation::identity(4).code(), Code(vec![0, 0, 0, 0]));
        assert_eq!(Permutation::longest(4).code(), Code(vec![3, 2, 1, 0]));
        for w in Permutation::all(4) {
            let c = w.code();
            assert_eq!(c.perm().unwrap(), w);
            assert_eq!(c.sum(), w.length());
        }
        assert!(Code(vec![3, 0, 0]).perm().is_err());
    }

    #[test]
    fn word_conventions_match_the_tables() {
        // "21" is s2*s1 = 312, whose code is (2,0,0)
        assert_eq!(Permutation::parse_word("21", 3).unwrap(), perm("312"));
        assert_eq!(Permutation::parse_word("12", 3).unwrap(), perm("231"));
        assert_eq!(Permutation::parse_word("121", 3).unwrap(), perm("321"));
        assert_eq!(Permutation::parse_word("id", 4).unwrap(), Permutation::identity(4));
    }

    #[test]
    fn reduced_words() {
        assert_eq!(perm("32415").reduced_word(), vec![1, 2, 1, 3]);
        assert_eq!(perm("42135").reduced_word(), vec![1, 3, 2, 1]);
        assert_eq!(Permutation::simple(1, 3).reduced_word(), vec![1]);
        // both reduced words of the longest element of S_3 are (1,2,1), (2,1,2);
        // the lexicographically smaller one is chosen
        assert_eq!(Permutation::longest(3).reduced_word(), vec![1, 2, 1]);
    }

    #[test]
    fn reduced_word_multiplies_back() {
        for w in Permutation::all(4) {
            let word = w.reduced_word();
            assert_eq!(word.len() as u32, w.length());
            assert_eq!(Permutation::from_word(&word, 4), w);
        }
    }

    #[test]
    fn down_arrows_into_identity_for_s3() {
        // arrows v <- w exist exactly from w = s1 (t12, q1), s2 (t23, q2),
        // w0 (t13, q1 q2), landing at the identity
        let mut found = Vec::new();
        for w in Permutation::all(3) {
            for a in extended_arrows(&w, None, Some(ArrowDirection::Down)) {
                if a.to.is_identity() {
                    found.push((w.clone(), a.i, a.j, a.weight_monomial()));
                }
            }
        }
        found.sort_by_key(|(w, _, _, _)| w.one_line().to_vec());
        assert_eq!(found.len(), 3);
        let q = |k: u32| Monomial::var(VarId::q(k));
        assert_eq!(found[0], (perm("132"), 2, 3, q(2)));
        assert_eq!(found[1], (perm("213"), 1, 2, q(1)));
        assert_eq!(found[2], (perm("321"), 1, 3, q(1).mul(&q(2))));
    }

    #[test]
    fn identity_arrows() {
        let id = Permutation::identity(3);
        let ups = extended_arrows(&id, None, Some(ArrowDirection::Up));
        assert_eq!(ups.len(), 2);
        let downs = extended_arrows(&id, None, Some(ArrowDirection::Down));
        assert!(downs.is_empty());
    }

    #[test]
    fn down_conditions_agree_exhaustively() {
        for n in 2..=4u32 {
            for v in Permutation::all(n) {
                for i in 1..=n {
                    for j in i + 1..=n {
                        assert_eq!(
                            down_by_length(&v, i, j),
                            down_by_values(&v, i, j),
                            "mismatch at v={v} t=({i},{j})"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn classical_covers_at_q_zero() {
        // dropping weighted (Down) arrows leaves exactly the Bruhat covers
        for v in Permutation::all(4) {
            let ups = extended_arrows(&v, None, Some(ArrowDirection::Up));
            let covers: Vec<_> = (1..=4)
                .flat_map(|i| (i + 1..=4).map(move |j| (i, j)))
                .filter(|&(i, j)| v.mul_transposition(i, j).length() == v.length() + 1)
                .collect();
            assert_eq!(ups.len(), covers.len());
        }
    }

    #[test]
    fn empty_path() {
        let v = Permutation::simple(1, 3);
        let paths = be_paths(&v, 1, 0, true);
        assert_eq!(paths.len(), 1);
        assert!(paths[0].is_empty());
        assert!(paths[0].weight_monomial().is_one());
    }

    #[test]
    fn color1_length1_paths_from_s1_in_s3() {
        // endpoints and weights reproduce S~_{s1}^2 = S~_{s2 s1} + q1
        let v = Permutation::simple(1, 3);
        let paths = be_paths(&v, 1, 1, true);
        let mut ends: Vec<(String, Monomial)> = paths
            .iter()
            .map(|p| (p.end().unwrap().to_string(), p.weight_monomial()))
            .collect();
        ends.sort_by(|a, b| a.0.cmp(&b.0));
        assert_eq!(
            ends,
            vec![
                ("123".to_string(), Monomial::var(VarId::q(1))),
                ("312".to_string(), Monomial::one()),
            ]
        );
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn length_properties(a in 0usize..24, b in 0usize..24) {
            let all = Permutation::all(4);
            let v = &all[a];
            let w = &all[b];
            prop_assert_eq!(v.inverse().length(), v.length());
            prop_assert!(v.compose(w).length() <= v.length() + w.length());
            prop_assert!(v.compose(&v.inverse()).is_identity());
        }
    }
}
