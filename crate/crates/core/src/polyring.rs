//! Sparse exact multivariate polynomials over arbitrary-precision rationals.
//!
//! Variables come in four families: `x_i`, `y_i` (degree 1), `q_i`
//! (degree 2) and auxiliary `t_i` (degree 1). A polynomial carries its
//! ambient `n`; all arithmetic is exact and results are kept in a canonical
//! form (no zero coefficients, terms ordered by the graded monomial order),
//! so printing is deterministic.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VarFamily {
    X,
    Y,
    Q,
    T,
}

/// A variable, e.g. `x3` or `q1`. Indices are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct VarId {
    pub family: VarFamily,
    pub index: u32,
}

impl VarId {
    pub fn x(index: u32) -> Self {
        VarId { family: VarFamily::X, index }
    }
    pub fn y(index: u32) -> Self {
        VarId { family: VarFamily::Y, index }
    }
    pub fn q(index: u32) -> Self {
        VarId { family: VarFamily::Q, index }
    }
    pub fn t(index: u32) -> Self {
        VarId { family: VarFamily::T, index }
    }

    /// Weighted degree: x, y, t count 1; q counts 2.
    pub fn weight(self) -> u64 {
        match self.family {
            VarFamily::Q => 2,
            _ => 1,
        }
    }

    /// Precedence rank; smaller rank = earlier in the order x1 > x2 > ... >
    /// y1 > ... > q1 > ... > t1 > ...
    fn rank(self) -> (u8, u32) {
        let f = match self.family {
            VarFamily::X => 0,
            VarFamily::Y => 1,
            VarFamily::Q => 2,
            VarFamily::T => 3,
        };
        (f, self.index)
    }

    /// Valid index range in an ambient context of size `n`. Q admits a
    /// second alphabet at offset n-1 (used for two-parameter canonical
    /// elements), hence the doubled bound.
    pub fn check_range(self, n: u32) -> Result<()> {
        let max = match self.family {
            VarFamily::X | VarFamily::Y | VarFamily::T => n,
            VarFamily::Q => 2 * n.saturating_sub(1),
        };
        if self.index == 0 || self.index > max {
            return Err(Error::VarOutOfRange { var: self.to_string(), n });
        }
        Ok(())
    }
}

impl PartialOrd for VarId {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for VarId {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rank().cmp(&other.rank())
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.family {
            VarFamily::X => 'x',
            VarFamily::Y => 'y',
            VarFamily::Q => 'q',
            VarFamily::T => 't',
        };
        write!(f, "{}{}", c, self.index)
    }
}

/// A monomial: sorted (by precedence) list of (variable, positive exponent).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    vars: Vec<(VarId, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { vars: Vec::new() }
    }

    pub fn var(v: VarId) -> Self {
        Monomial { vars: vec![(v, 1)] }
    }

    pub fn var_pow(v: VarId, e: u32) -> Self {
        if e == 0 {
            Monomial::one()
        } else {
            Monomial { vars: vec![(v, e)] }
        }
    }

    pub fn is_one(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (VarId, u32)> + '_ {
        self.vars.iter().copied()
    }

    pub fn exponent(&self, v: VarId) -> u32 {
        self.vars
            .iter()
            .find(|(w, _)| *w == v)
            .map(|(_, e)| *e)
            .unwrap_or(0)
    }

    pub fn weighted_degree(&self) -> u64 {
        self.vars.iter().map(|(v, e)| v.weight() * *e as u64).sum()
    }

    pub fn degree_in_family(&self, fam: VarFamily) -> u64 {
        self.vars
            .iter()
            .filter(|(v, _)| v.family == fam)
            .map(|(_, e)| *e as u64)
            .sum()
    }

    pub fn has_family(&self, fam: VarFamily) -> bool {
        self.vars.iter().any(|(v, _)| v.family == fam)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.vars.len() + other.vars.len());
        let (mut i, mut j) = (0, 0);
        while i < self.vars.len() && j < other.vars.len() {
            match self.vars[i].0.cmp(&other.vars[j].0) {
                Ordering::Less => {
                    out.push(self.vars[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(other.vars[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((self.vars[i].0, self.vars[i].1 + other.vars[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.vars[i..]);
        out.extend_from_slice(&other.vars[j..]);
        Monomial { vars: out }
    }

    /// Splits into (part in family `fam`, complementary part).
    pub fn split_family(&self, fam: VarFamily) -> (Monomial, Monomial) {
        let (a, b): (Vec<_>, Vec<_>) = self.vars.iter().partition(|(v, _)| v.family == fam);
        (Monomial { vars: a }, Monomial { vars: b })
    }

    /// Exponent vector of the family part, as a dense 1-based slice of
    /// length `n` (index i-1 holds the exponent of the i-th variable).
    pub fn family_exponents(&self, fam: VarFamily, n: u32) -> Vec<u32> {
        let mut out = vec![0u32; n as usize];
        for (v, e) in &self.vars {
            if v.family == fam {
                out[(v.index - 1) as usize] = *e;
            }
        }
        out
    }
}

impl Ord for Monomial {
    /// Graded order: weighted degree first, then lexicographic with
    /// x1 > x2 > ... > y1 > ... > q1 > ... > t1 > ... (a larger exponent on
    /// an earlier variable wins).
    fn cmp(&self, other: &Self) -> Ordering {
        match self.weighted_degree().cmp(&other.weighted_degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let (mut i, mut j) = (0, 0);
        loop {
            match (self.vars.get(i), other.vars.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                    // self has an exponent on an earlier variable
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => {
                        match ea.cmp(&eb) {
                            Ordering::Equal => {}
                            ord => return ord,
                        }
                        i += 1;
                        j += 1;
                    }
                },
            }
        }
    }
}
impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Comparison of pure-x exponent vectors used by the triangularity
/// statements for (quantum) Schubert polynomials: the exponent of the last
/// variable is the most significant, i.e. I < J iff at the largest position
/// where they differ, I has the smaller entry. Under this order the leading
/// monomial of a Schubert polynomial is x^{code(w)}.
pub fn schubert_lex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    let len = a.len().max(b.len());
    for k in (0..len).rev() {
        let ea = a.get(k).copied().unwrap_or(0);
        let eb = b.get(k).copied().unwrap_or(0);
        match ea.cmp(&eb) {
            Ordering::Equal => {}
            ord => return ord,
        }
    }
    Ordering::Equal
}

pub type Coeff = BigRational;

pub fn coeff_int(v: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(v))
}

/// Sparse exact polynomial in an ambient context of size `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    n: u32,
    terms: BTreeMap<Monomial, Coeff>,
}

impl Poly {
    pub fn zero(n: u32) -> Self {
        Poly { n, terms: BTreeMap::new() }
    }

    pub fn one(n: u32) -> Self {
        Poly::constant(n, coeff_int(1))
    }

    pub fn constant(n: u32, c: Coeff) -> Self {
        let mut p = Poly::zero(n);
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn int(n: u32, v: i64) -> Self {
        Poly::constant(n, coeff_int(v))
    }

    pub fn var(n: u32, v: VarId) -> Self {
        let mut p = Poly::zero(n);
        p.add_term(Monomial::var(v), coeff_int(1));
        p
    }

    pub fn monomial(n: u32, m: Monomial, c: Coeff) -> Self {
        let mut p = Poly::zero(n);
        p.add_term(m, c);
        p
    }

    /// Monomial x^I from a dense exponent vector (entry k-1 is the exponent
    /// of x_k).
    pub fn x_monomial(n: u32, exps: &[u32]) -> Self {
        let mut m = Monomial::one();
        for (k, &e) in exps.iter().enumerate() {
            if e > 0 {
                m = m.mul(&Monomial::var_pow(VarId::x(k as u32 + 1), e));
            }
        }
        Poly::monomial(n, m, coeff_int(1))
    }

    pub fn context(&self) -> u32 {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Coeff)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Coeff {
        self.terms.get(m).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn constant_term(&self) -> Coeff {
        self.coefficient(&Monomial::one())
    }

    pub fn add_term(&mut self, m: Monomial, c: Coeff) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn same_context(&self, other: &Poly) -> Result<()> {
        if self.n != other.n {
            return Err(Error::ContextMismatch(self.n, other.n));
        }
        Ok(())
    }

    fn assert_ctx(&self, other: &Poly) {
        assert_eq!(self.n, other.n, "polynomial context mismatch: {} vs {}", self.n, other.n);
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.assert_ctx(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.assert_ctx(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Poly {
        let mut out = Poly::zero(self.n);
        for (m, c) in &self.terms {
            out.terms.insert(m.clone(), -c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        self.assert_ctx(other);
        let mut out = Poly::zero(self.n);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &Coeff) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.n);
        }
        let mut out = Poly::zero(self.n);
        for (m, k) in &self.terms {
            out.terms.insert(m.clone(), k * c);
        }
        out
    }

    pub fn scale_int(&self, v: i64) -> Poly {
        self.scale(&coeff_int(v))
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Coeff) -> Poly {
        let mut out = Poly::zero(self.n);
        for (m1, c1) in &self.terms {
            out.add_term(m1.mul(m), c1 * c);
        }
        out
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut base = self.clone();
        let mut exp = e;
        let mut acc = Poly::one(self.n);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Simultaneous substitution of variables by polynomials. Unbound
    /// variables stay.
    pub fn substitute(&self, bindings: &BTreeMap<VarId, Poly>) -> Poly {
        for p in bindings.values() {
            self.assert_ctx(p);
        }
        let mut out = Poly::zero(self.n);
        let mut powers: BTreeMap<(VarId, u32), Poly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut term = Poly::constant(self.n, c.clone());
            let mut plain = Monomial::one();
            for (v, e) in m.iter() {
                if let Some(p) = bindings.get(&v) {
                    let pw = powers
                        .entry((v, e))
                        .or_insert_with(|| p.pow(e))
                        .clone();
                    term = term.mul(&pw);
                } else {
                    plain = plain.mul(&Monomial::var_pow(v, e));
                }
            }
            for (tm, tc) in term.terms {
                out.add_term(tm.mul(&plain), tc);
            }
        }
        out
    }

    /// Sets the given variables to zero.
    pub fn set_zero(&self, vars: &[VarId]) -> Poly {
        let mut out = Poly::zero(self.n);
        'term: for (m, c) in &self.terms {
            for v in vars {
                if m.exponent(*v) > 0 {
                    continue 'term;
                }
            }
            out.terms.insert(m.clone(), c.clone());
        }
        out
    }

    /// Renames variables according to the map; variables not in the map are
    /// kept. The map must be injective on the variables present.
    pub fn rename(&self, map: &BTreeMap<VarId, VarId>) -> Poly {
        let mut out = Poly::zero(self.n);
        for (m, c) in &self.terms {
            let mut nm = Monomial::one();
            for (v, e) in m.iter() {
                let w = map.get(&v).copied().unwrap_or(v);
                nm = nm.mul(&Monomial::var_pow(w, e));
            }
            out.add_term(nm, c.clone());
        }
        out
    }

    /// Re-embeds into a larger ambient context.
    pub fn extend_context(&self, n: u32) -> Poly {
        assert!(n >= self.n, "cannot shrink context from {} to {}", self.n, n);
        Poly { n, terms: self.terms.clone() }
    }

    /// Shrinks the context; fails if any variable is out of range for the
    /// smaller n.
    pub fn restrict_context(&self, n: u32) -> Result<Poly> {
        for (m, _) in &self.terms {
            for (v, _) in m.iter() {
                v.check_range(n)?;
            }
        }
        Ok(Poly { n, terms: self.terms.clone() })
    }

    /// Common weighted degree of all terms, `None` if inhomogeneous. The
    /// zero polynomial reports `Some(0)`.
    pub fn weighted_degree(&self) -> Option<u64> {
        let mut it = self.terms.keys();
        let d = match it.next() {
            None => return Some(0),
            Some(m) => m.weighted_degree(),
        };
        for m in it {
            if m.weighted_degree() != d {
                return None;
            }
        }
        Some(d)
    }

    pub fn max_weighted_degree(&self) -> u64 {
        self.terms.keys().map(|m| m.weighted_degree()).max().unwrap_or(0)
    }

    /// Splits into weighted-homogeneous components, keyed by degree.
    pub fn homogeneous_components(&self) -> BTreeMap<u64, Poly> {
        let mut out: BTreeMap<u64, Poly> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.weighted_degree())
                .or_insert_with(|| Poly::zero(self.n))
                .terms
                .insert(m.clone(), c.clone());
        }
        out
    }

    pub fn max_exponent(&self, v: VarId) -> u32 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    /// Coefficient of v^k, as a polynomial no longer involving v^k (the
    /// other variables are untouched).
    pub fn coeff_of_power(&self, v: VarId, k: u32) -> Poly {
        let mut out = Poly::zero(self.n);
        for (m, c) in &self.terms {
            if m.exponent(v) == k {
                let mut nm = Monomial::one();
                for (w, e) in m.iter() {
                    if w != v {
                        nm = nm.mul(&Monomial::var_pow(w, e));
                    }
                }
                out.add_term(nm, c.clone());
            }
        }
        out
    }

    /// Partial derivative with respect to a variable.
    pub fn derivative(&self, v: VarId) -> Poly {
        let mut out = Poly::zero(self.n);
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            if e == 0 {
                continue;
            }
            let mut nm = Monomial::one();
            for (w, k) in m.iter() {
                let k = if w == v { k - 1 } else { k };
                nm = nm.mul(&Monomial::var_pow(w, k));
            }
            out.add_term(nm, c * coeff_int(e as i64));
        }
        out
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.denom().is_one())
    }

    /// True when every variable present belongs to one of the given
    /// families.
    pub fn only_families(&self, fams: &[VarFamily]) -> bool {
        self.terms
            .keys()
            .all(|m| m.iter().all(|(v, _)| fams.contains(&v.family)))
    }

    pub fn degree_in_family(&self, fam: VarFamily) -> u64 {
        self.terms
            .keys()
            .map(|m| m.degree_in_family(fam))
            .max()
            .unwrap_or(0)
    }

    /// Numeric evaluation; every variable present must be bound.
    pub fn eval_complex(&self, values: &BTreeMap<VarId, Complex64>) -> Result<Complex64> {
        let mut acc = Complex64::new(0.0, 0.0);
        for (m, c) in &self.terms {
            let mut term = Complex64::new(
                c.numer().to_f64().ok_or_else(|| Error::MissingValue("coefficient".into()))?
                    / c.denom().to_f64().unwrap_or(1.0),
                0.0,
            );
            for (v, e) in m.iter() {
                let val = values
                    .get(&v)
                    .copied()
                    .ok_or_else(|| Error::MissingValue(v.to_string()))?;
                term *= val.powu(e);
            }
            acc += term;
        }
        Ok(acc)
    }

    // ------------------------------------------------------------------
    // Parsing and printing
    // ------------------------------------------------------------------

    /// Parses the `coeff*x1^2*q1` sum format. Coefficients are optional
    /// integers (or integer ratios `a/b`); exponents are optional and
    /// default to 1.
    pub fn parse(text: &str, n: u32) -> Result<Poly> {
        Parser::new(text, n).parse()
    }

    pub fn to_text(&self) -> String {
        self.format(FormatMode::Text)
    }

    pub fn to_latex(&self) -> String {
        self.format(FormatMode::Latex)
    }

    fn format(&self, mode: FormatMode) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let coeff_part = if abs.is_one() && !m.is_one() {
                None
            } else {
                Some(format_coeff(&abs))
            };
            let mono_part = if m.is_one() {
                None
            } else {
                // display order: q parts first (they behave like scalars),
                // then x, y, t
                let mut vars: Vec<(VarId, u32)> = m.iter().collect();
                vars.sort_by_key(|(v, _)| {
                    let fam = match v.family {
                        VarFamily::Q => 0u8,
                        VarFamily::X => 1,
                        VarFamily::Y => 2,
                        VarFamily::T => 3,
                    };
                    (fam, v.index)
                });
                Some(match mode {
                    FormatMode::Text => vars
                        .iter()
                        .map(|(v, e)| {
                            if *e == 1 {
                                v.to_string()
                            } else {
                                format!("{}^{}", v, e)
                            }
                        })
                        .collect::<Vec<_>>()
                        .join("*"),
                    FormatMode::Latex => vars
                        .iter()
                        .map(|(v, e)| {
                            let fam = match v.family {
                                VarFamily::X => "x",
                                VarFamily::Y => "y",
                                VarFamily::Q => "q",
                                VarFamily::T => "t",
                            };
                            if *e == 1 {
                                format!("{}_{{{}}}", fam, v.index)
                            } else {
                                format!("{}_{{{}}}^{{{}}}", fam, v.index, e)
                            }
                        })
                        .collect::<Vec<_>>()
                        .join(""),
                })
            };
            match (coeff_part, mono_part) {
                (Some(c), Some(m)) => {
                    out.push_str(&c);
                    out.push_str(match mode {
                        FormatMode::Text => "*",
                        FormatMode::Latex => "",
                    });
                    out.push_str(&m);
                }
                (Some(c), None) => out.push_str(&c),
                (None, Some(m)) => out.push_str(&m),
                (None, None) => unreachable!(),
            }
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| {
                let mut mono = serde_json::Map::new();
                for (v, e) in m.iter() {
                    mono.insert(v.to_string(), serde_json::Value::from(e));
                }
                serde_json::json!({ "c": format_coeff(c), "m": mono })
            })
            .collect();
        serde_json::json!({ "n": self.n, "terms": terms })
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Poly> {
        let obj = value
            .as_object()
            .ok_or_else(|| Error::Parse { offset: 0, msg: "expected JSON object".into() })?;
        let n = obj
            .get("n")
            .and_then(|v| v.as_u64())
            .ok_or_else(|| Error::Parse { offset: 0, msg: "missing field n".into() })?
            as u32;
        let mut poly = Poly::zero(n);
        let terms = obj
            .get("terms")
            .and_then(|v| v.as_array())
            .ok_or_else(|| Error::Parse { offset: 0, msg: "missing field terms".into() })?;
        for t in terms {
            let c = t
                .get("c")
                .and_then(|v| v.as_str())
                .ok_or_else(|| Error::Parse { offset: 0, msg: "term missing c".into() })?;
            let coeff = parse_coeff(c)?;
            let mut mono = Monomial::one();
            if let Some(m) = t.get("m").and_then(|v| v.as_object()) {
                for (k, e) in m {
                    let v = parse_var(k.as_bytes(), &mut 0)
                        .ok_or_else(|| Error::Parse { offset: 0, msg: format!("bad variable {k}") })?;
                    v.check_range(n)?;
                    let e = e
                        .as_u64()
                        .ok_or_else(|| Error::Parse { offset: 0, msg: "bad exponent".into() })?
                        as u32;
                    mono = mono.mul(&Monomial::var_pow(v, e));
                }
            }
            poly.add_term(mono, coeff);
        }
        Ok(poly)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

#[derive(Clone, Copy)]
enum FormatMode {
    Text,
    Latex,
}

fn format_coeff(c: &Coeff) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

fn parse_coeff(s: &str) -> Result<Coeff> {
    let parse_int = |t: &str| {
        t.parse::<BigInt>()
            .map_err(|_| Error::Parse { offset: 0, msg: format!("bad coefficient {t}") })
    };
    match s.split_once('/') {
        Some((a, b)) => Ok(BigRational::new(parse_int(a)?, parse_int(b)?)),
        None => Ok(BigRational::from_integer(parse_int(s)?)),
    }
}

fn parse_var(bytes: &[u8], pos: &mut usize) -> Option<VarId> {
    let fam = match bytes.get(*pos)? {
        b'x' => VarFamily::X,
        b'y' => VarFamily::Y,
        b'q' => VarFamily::Q,
        b't' => VarFamily::T,
        _ => return None,
    };
    let start = *pos + 1;
    let mut end = start;
    while end < bytes.len() && bytes[end].is_ascii_digit() {
        end += 1;
    }
    if end == start {
        return None;
    }
    let index: u32 = std::str::from_utf8(&bytes[start..end]).ok()?.parse().ok()?;
    *pos = end;
    Some(VarId { family: fam, index })
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    n: u32,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str, n: u32) -> Self {
        Parser { bytes: text.as_bytes(), pos: 0, n }
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse { offset: self.pos, msg: msg.into() }
    }

    fn skip_ws(&mut self) {
        while self.bytes.get(self.pos).is_some_and(|b| b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn parse(mut self) -> Result<Poly> {
        let mut poly = Poly::zero(self.n);
        self.skip_ws();
        if self.peek().is_none() {
            return Err(self.err("empty input"));
        }
        let mut first = true;
        loop {
            self.skip_ws();
            let mut sign = 1i64;
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                }
                Some(b'-') => {
                    sign = -1;
                    self.pos += 1;
                }
                Some(_) if first => {}
                Some(c) => {
                    return Err(self.err(format!("expected '+' or '-', found {:?}", c as char)))
                }
                None => break,
            }
            first = false;
            self.skip_ws();
            let (m, c) = self.parse_term()?;
            poly.add_term(m, c * coeff_int(sign));
            self.skip_ws();
            if self.peek().is_none() {
                break;
            }
        }
        Ok(poly)
    }

    fn parse_term(&mut self) -> Result<(Monomial, Coeff)> {
        let mut coeff = Coeff::one();
        let mut mono = Monomial::one();
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b) if b.is_ascii_digit() => {
                    let num = self.parse_uint()?;
                    let mut c = BigRational::from_integer(num);
                    self.skip_ws();
                    if self.peek() == Some(b'/') {
                        self.pos += 1;
                        self.skip_ws();
                        let den = self.parse_uint()?;
                        if den.is_zero() {
                            return Err(self.err("zero denominator"));
                        }
                        c /= BigRational::from_integer(den);
                    }
                    coeff *= c;
                }
                Some(b'x') | Some(b'y') | Some(b'q') | Some(b't') => {
                    let start = self.pos;
                    let v = parse_var(self.bytes, &mut self.pos)
                        .ok_or_else(|| self.err("expected variable like x1"))?;
                    if v.check_range(self.n).is_err() {
                        self.pos = start;
                        return Err(Error::VarOutOfRange { var: v.to_string(), n: self.n });
                    }
                    self.skip_ws();
                    let mut e = 1u32;
                    if self.peek() == Some(b'^') {
                        self.pos += 1;
                        self.skip_ws();
                        let val = self.parse_uint()?;
                        e = val
                            .to_u32()
                            .ok_or_else(|| self.err("exponent too large"))?;
                    }
                    mono = mono.mul(&Monomial::var_pow(v, e));
                }
                _ => return Err(self.err("expected coefficient or variable")),
            }
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok((mono, coeff))
    }

    fn parse_uint(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected a number"));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .parse::<BigInt>()
            .map_err(|_| self.err("bad number"))
    }
}

/// Exponent vector I = (i_1, ..., i_n) for pure-x monomials.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExponentVec(pub Vec<u32>);

impl ExponentVec {
    pub fn zero(n: u32) -> Self {
        ExponentVec(vec![0; n as usize])
    }

    pub fn delta(n: u32) -> Self {
        ExponentVec((0..n).map(|k| n - 1 - k).collect())
    }

    /// I ⊂ δ: entry k (0-based) at most n-1-k.
    pub fn sub_delta(&self, n: u32) -> bool {
        self.0.len() == n as usize
            && self.0.iter().enumerate().all(|(k, &e)| e <= n - 1 - k as u32)
    }

    pub fn total(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn complement_in_delta(&self, n: u32) -> ExponentVec {
        ExponentVec(
            self.0
                .iter()
                .enumerate()
                .map(|(k, &e)| n - 1 - k as u32 - e)
                .collect(),
        )
    }

    pub fn to_poly(&self, n: u32) -> Poly {
        Poly::x_monomial(n, &self.0)
    }

    /// All I ⊂ δ for the given n, in increasing Schubert-lex order.
    pub fn all_sub_delta(n: u32) -> Vec<ExponentVec> {
        let mut out = vec![vec![]];
        // build from the most significant position (x_n) down to x_1
        for k in (0..n).rev() {
            let max = n - 1 - k;
            let mut next = Vec::new();
            for tail in &out {
                for e in 0..=max {
                    let mut v = vec![e];
                    v.extend(tail.iter().copied());
                    next.push(v);
                }
            }
            out = next;
        }
        // `out` now enumerates with x_n slowest... ensure order by sorting.
        let mut vecs: Vec<ExponentVec> = out.into_iter().map(ExponentVec).collect();
        vecs.sort_by(|a, b| schubert_lex_cmp(&a.0, &b.0));
        vecs
    }
}
