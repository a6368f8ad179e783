//! The cohomology quotient rings of the flag manifold: the classical ring
//! modulo the elementary symmetric ideal and its quantum deformation modulo
//! the quantum elementary ideal. Provides normal forms on the staircase
//! monomial basis, the residue functional, the (quantum) residue pairing,
//! the Jacobian, and reduction modulo the equivariant ideal.
//!
//! The normal form rewrites along the relations
//! `x_m^{n-m+1} = x_m^{n-m+1} - h~_{n-m+1}(x_1..x_m)` (each right side is in
//! the ideal and the subtracted polynomial has strictly smaller monomials
//! when the exponent of the last variable is read as most significant), so
//! no division ever occurs and integrality is preserved. An independent
//! per-degree linear solve against the raw generators is provided as an
//! oracle and cross-checked in the tests.

use std::collections::{BTreeMap, HashMap};
use std::sync::Mutex;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::polyring::{coeff_int, Coeff, ExponentVec, Monomial, Poly, VarFamily, VarId};
use crate::qsym::{classical_e, classical_h, quantum_e, quantum_h_full};
use crate::symgroup::Permutation;

const MAX_N_QUOTIENT: u32 = 5;
const MAX_N_EQUIVARIANT: u32 = 4;

/// Basis flavor for quotient classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Basis {
    Monomial,
    QSchubert,
}

/// A quotient-ring element as a coefficient vector over a declared basis;
/// coefficients are polynomials in q.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QuotientElement {
    Monomial {
        n: u32,
        coeffs: BTreeMap<ExponentVec, Poly>,
    },
    QSchubert {
        n: u32,
        coeffs: BTreeMap<Permutation, Poly>,
    },
}

impl QuotientElement {
    pub fn n(&self) -> u32 {
        match self {
            QuotientElement::Monomial { n, .. } => *n,
            QuotientElement::QSchubert { n, .. } => *n,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            QuotientElement::Monomial { coeffs, .. } => coeffs.values().all(Poly::is_zero),
            QuotientElement::QSchubert { coeffs, .. } => coeffs.values().all(Poly::is_zero),
        }
    }

    pub fn monomial_coeffs(&self) -> &BTreeMap<ExponentVec, Poly> {
        match self {
            QuotientElement::Monomial { coeffs, .. } => coeffs,
            _ => panic!("not a monomial-basis element"),
        }
    }

    pub fn schubert_coeffs(&self) -> &BTreeMap<Permutation, Poly> {
        match self {
            QuotientElement::QSchubert { coeffs, .. } => coeffs,
            _ => panic!("not a Schubert-basis element"),
        }
    }

    pub fn schubert_coeff(&self, w: &Permutation) -> Poly {
        match self {
            QuotientElement::QSchubert { n, coeffs } => {
                coeffs.get(w).cloned().unwrap_or_else(|| Poly::zero(*n))
            }
            _ => panic!("not a Schubert-basis element"),
        }
    }

    pub fn add(&self, other: &QuotientElement) -> QuotientElement {
        match (self, other) {
            (
                QuotientElement::Monomial { n, coeffs: a },
                QuotientElement::Monomial { coeffs: b, .. },
            ) => {
                let mut coeffs = a.clone();
                for (k, v) in b {
                    let entry = coeffs.entry(k.clone()).or_insert_with(|| Poly::zero(*n));
                    *entry = entry.add(v);
                }
                coeffs.retain(|_, v| !v.is_zero());
                QuotientElement::Monomial { n: *n, coeffs }
            }
            (
                QuotientElement::QSchubert { n, coeffs: a },
                QuotientElement::QSchubert { coeffs: b, .. },
            ) => {
                let mut coeffs = a.clone();
                for (k, v) in b {
                    let entry = coeffs.entry(k.clone()).or_insert_with(|| Poly::zero(*n));
                    *entry = entry.add(v);
                }
                coeffs.retain(|_, v| !v.is_zero());
                QuotientElement::QSchubert { n: *n, coeffs }
            }
            _ => panic!("basis mismatch in quotient addition"),
        }
    }

    pub fn scale(&self, f: &Poly) -> QuotientElement {
        match self {
            QuotientElement::Monomial { n, coeffs } => QuotientElement::Monomial {
                n: *n,
                coeffs: coeffs
                    .iter()
                    .filter_map(|(k, v)| {
                        let p = v.mul(f);
                        (!p.is_zero()).then_some((k.clone(), p))
                    })
                    .collect(),
            },
            QuotientElement::QSchubert { n, coeffs } => QuotientElement::QSchubert {
                n: *n,
                coeffs: coeffs
                    .iter()
                    .filter_map(|(k, v)| {
                        let p = v.mul(f);
                        (!p.is_zero()).then_some((k.clone(), p))
                    })
                    .collect(),
            },
        }
    }

    /// Representative polynomial; for the Schubert basis a table of the
    /// basis polynomials must be supplied.
    pub fn to_poly_with(&self, schubert: Option<&BTreeMap<Permutation, Poly>>) -> Poly {
        match self {
            QuotientElement::Monomial { n, coeffs } => {
                let mut acc = Poly::zero(*n);
                for (i, c) in coeffs {
                    acc = acc.add(&c.mul(&i.to_poly(*n)));
                }
                acc
            }
            QuotientElement::QSchubert { n, coeffs } => {
                let tbl = schubert.expect("Schubert table required");
                let mut acc = Poly::zero(*n);
                for (w, c) in coeffs {
                    acc = acc.add(&c.mul(&tbl[w]));
                }
                acc
            }
        }
    }
}

/// The quotient ring for a fixed n, classical (q = 0) or quantum.
pub struct QuotientRing {
    n: u32,
    quantum: bool,
    basis: Vec<ExponentVec>,
    basis_index: HashMap<Vec<u32>, usize>,
    /// rewriting polynomial for x_m^{n-m+1}, index m-1
    rewrite: Vec<Poly>,
    /// q-free generators are the classical limit of the quantum ones
    generators: Vec<Poly>,
    nf_memo: Mutex<HashMap<Vec<u32>, Poly>>,
    product_memo: Mutex<HashMap<(usize, usize), Poly>>,
}

impl QuotientRing {
    pub fn new(n: u32, quantum: bool) -> Result<Self> {
        if !(2..=MAX_N_QUOTIENT).contains(&n) {
            return Err(Error::UnsupportedSize {
                n,
                what: "quotient-ring normal forms",
                max: MAX_N_QUOTIENT,
            });
        }
        let basis = ExponentVec::all_sub_delta(n);
        let basis_index = basis
            .iter()
            .enumerate()
            .map(|(i, v)| (v.0.clone(), i))
            .collect();
        let mut rewrite = Vec::new();
        for m in 1..=n {
            let k = n - m + 1;
            // the full-alphabet complete polynomial of degree n-m+1 in the
            // first m variables lies in the ideal and has leading term
            // x_m^{n-m+1}; at q = 0 it degenerates to h_{n-m+1}(x_1..x_m)
            let mut h = quantum_h_full(k, m, n);
            if !quantum {
                let qs: Vec<VarId> = (1..2 * n).map(VarId::q).collect();
                h = h.set_zero(&qs);
            }
            let head = Poly::x_monomial(n, &power_vec(n, m, k));
            let tail = head.sub(&h);
            assert!(
                tail.coefficient(&x_power_mono(m, k)).is_zero(),
                "rewrite head must cancel"
            );
            rewrite.push(tail);
        }
        let generators = (1..=n)
            .map(|i| {
                if quantum {
                    quantum_e(i, n, n)
                } else {
                    classical_e(i, n, n)
                }
            })
            .collect();
        Ok(QuotientRing {
            n,
            quantum,
            basis,
            basis_index,
            rewrite,
            generators,
            nf_memo: Mutex::new(HashMap::new()),
            product_memo: Mutex::new(HashMap::new()),
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn is_quantum(&self) -> bool {
        self.quantum
    }

    pub fn basis(&self) -> &[ExponentVec] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_position(&self, i: &ExponentVec) -> Option<usize> {
        self.basis_index.get(&i.0).copied()
    }

    /// Ideal generators: the (quantum) elementary symmetric polynomials in
    /// all n variables.
    pub fn generators(&self) -> &[Poly] {
        &self.generators
    }

    /// Normal form of an x-monomial given by its dense exponent vector.
    fn nf_x(&self, exps: &[u32]) -> Poly {
        if let Some(p) = self.nf_memo.lock().unwrap().get(exps) {
            return p.clone();
        }
        // largest index with an excess exponent
        let excess = (0..self.n as usize)
            .rev()
            .find(|&k| exps[k] > self.n - 1 - k as u32);
        let result = match excess {
            None => Poly::x_monomial(self.n, exps),
            Some(k) => {
                let m = k as u32 + 1;
                let pow = self.n - m + 1;
                let mut rest = exps.to_vec();
                rest[k] -= pow;
                // x^exps = x^rest * x_m^{n-m+1} == x^rest * rewrite[m-1]
                let mut acc = Poly::zero(self.n);
                for (mono, c) in self.rewrite[(m - 1) as usize].terms() {
                    let (xpart, coeff_mono) = mono.split_family(VarFamily::X);
                    let mut e = xpart.family_exponents(VarFamily::X, self.n);
                    for (i, v) in e.iter_mut().enumerate() {
                        *v += rest[i];
                    }
                    acc = acc.add(&self.nf_x(&e).mul_monomial(&coeff_mono, c));
                }
                acc
            }
        };
        self.nf_memo
            .lock()
            .unwrap()
            .insert(exps.to_vec(), result.clone());
        result
    }

    /// Normal form of an arbitrary polynomial: x-monomials are reduced onto
    /// the staircase basis, every other variable rides along in the
    /// coefficients. In the classical ring, q variables are set to zero
    /// first.
    pub fn normal_form_poly(&self, f: &Poly) -> Poly {
        let f = self.prepare(f);
        let mut acc = Poly::zero(self.n);
        for (mono, c) in f.terms() {
            let (xpart, rest) = mono.split_family(VarFamily::X);
            let exps = xpart.family_exponents(VarFamily::X, self.n);
            acc = acc.add(&self.nf_x(&exps).mul_monomial(&rest, c));
        }
        acc
    }

    fn prepare(&self, f: &Poly) -> Poly {
        assert_eq!(f.context(), self.n, "context mismatch");
        if self.quantum {
            f.clone()
        } else {
            let qs: Vec<VarId> = (1..2 * self.n).map(VarId::q).collect();
            f.set_zero(&qs)
        }
    }

    /// Normal form as a monomial-basis quotient element.
    pub fn normal_form(&self, f: &Poly) -> QuotientElement {
        let nf = self.normal_form_poly(f);
        let mut coeffs: BTreeMap<ExponentVec, Poly> = BTreeMap::new();
        for (mono, c) in nf.terms() {
            let (xpart, rest) = mono.split_family(VarFamily::X);
            let i = ExponentVec(xpart.family_exponents(VarFamily::X, self.n));
            debug_assert!(i.sub_delta(self.n));
            coeffs
                .entry(i)
                .or_insert_with(|| Poly::zero(self.n))
                .add_term(rest, c.clone());
        }
        coeffs.retain(|_, v| !v.is_zero());
        QuotientElement::Monomial { n: self.n, coeffs }
    }

    /// The residue: coefficient of x^delta in the normal form. Returns a
    /// polynomial in q (and in any other non-x variables the input carried).
    pub fn residue(&self, f: &Poly) -> Poly {
        let nf = self.normal_form_poly(f);
        let delta = ExponentVec::delta(self.n);
        let mut out = Poly::zero(self.n);
        for (mono, c) in nf.terms() {
            let (xpart, rest) = mono.split_family(VarFamily::X);
            if xpart.family_exponents(VarFamily::X, self.n) == delta.0 {
                out.add_term(rest, c.clone());
            }
        }
        out
    }

    /// The residue pairing <f, g> = Res(f g).
    pub fn pair(&self, f: &Poly, g: &Poly) -> Poly {
        self.residue(&f.mul(g))
    }

    /// Normal form of the product of two basis monomials (memoized).
    pub fn basis_product_nf(&self, a: usize, b: usize) -> Poly {
        let key = if a <= b { (a, b) } else { (b, a) };
        if let Some(p) = self.product_memo.lock().unwrap().get(&key) {
            return p.clone();
        }
        let mut exps = self.basis[key.0].0.clone();
        for (k, e) in self.basis[key.1].0.iter().enumerate() {
            exps[k] += e;
        }
        let p = self.nf_x(&exps);
        self.product_memo.lock().unwrap().insert(key, p.clone());
        p
    }

    /// Gram matrix entry <x^I, x^J> for basis positions.
    pub fn gram_entry(&self, a: usize, b: usize) -> Poly {
        let nf = self.basis_product_nf(a, b);
        let delta = ExponentVec::delta(self.n);
        let mut out = Poly::zero(self.n);
        for (mono, c) in nf.terms() {
            let (xpart, rest) = mono.split_family(VarFamily::X);
            if xpart.family_exponents(VarFamily::X, self.n) == delta.0 {
                out.add_term(rest, c.clone());
            }
        }
        out
    }

    /// Trace of multiplication by f on the quotient.
    pub fn trace(&self, f: &Poly) -> Poly {
        let mut acc = Poly::zero(self.n);
        for (idx, i) in self.basis.iter().enumerate() {
            let nf = self.normal_form(&self.prepare(f).mul(&i.to_poly(self.n)));
            if let QuotientElement::Monomial { coeffs, .. } = nf {
                if let Some(c) = coeffs.get(i) {
                    acc = acc.add(c);
                }
            }
            let _ = idx;
        }
        acc
    }

    /// The Jacobian determinant of the ideal generators with respect to the
    /// x variables.
    pub fn jacobian(&self) -> Poly {
        let mat: Vec<Vec<Poly>> = self
            .generators
            .iter()
            .map(|g| (1..=self.n).map(|j| g.derivative(VarId::x(j))).collect())
            .collect();
        crate::qsym::det_poly(&mat)
    }

    /// Independent normal-form oracle: per weighted-homogeneous component,
    /// solve the exact linear system expressing the component over the
    /// staircase basis plus multiples of the raw generators. Slow; used to
    /// cross-check the rewriting route.
    pub fn normal_form_linear_oracle(&self, f: &Poly) -> Result<Poly> {
        let f = self.prepare(f);
        if !f.only_families(&[VarFamily::X, VarFamily::Q]) {
            return Err(Error::NonIntegral(
                "linear oracle expects x,q variables only".into(),
            ));
        }
        let mut out = Poly::zero(self.n);
        for (_, comp) in f.homogeneous_components() {
            out = out.add(&self.nf_component_linear(&comp)?);
        }
        Ok(out)
    }

    fn nf_component_linear(&self, comp: &Poly) -> Result<Poly> {
        let d = comp.weighted_degree().expect("homogeneous component") as u32;
        let n = self.n;
        // columns: basis part q^a x^I with 2|a| + |I| = d, then generator
        // multiples q^a x^K e_i with 2|a| + |K| + i = d
        let mut columns: Vec<Poly> = Vec::new();
        let mut basis_cols = 0usize;
        for i in &self.basis {
            let rem = d as i64 - i.total() as i64;
            if rem < 0 || (self.quantum && rem % 2 != 0) || (!self.quantum && rem != 0) {
                continue;
            }
            for qm in q_monomials(n, (rem / 2) as u32, self.quantum) {
                columns.push(i.to_poly(n).mul_monomial(&qm, &coeff_int(1)));
                basis_cols += 1;
            }
        }
        for (gi, g) in self.generators.iter().enumerate() {
            let deg_g = (gi + 1) as u32;
            if deg_g > d {
                continue;
            }
            for k_deg in 0..=(d - deg_g) {
                let rem = d - deg_g - k_deg;
                if self.quantum && rem % 2 != 0 {
                    continue;
                }
                if !self.quantum && rem != 0 {
                    continue;
                }
                for k in x_monomials_of_degree(n, k_deg) {
                    for qm in q_monomials(n, rem / 2, self.quantum) {
                        columns.push(
                            g.mul(&Poly::x_monomial(n, &k)).mul_monomial(&qm, &coeff_int(1)),
                        );
                    }
                }
            }
        }
        // rows: all monomials appearing anywhere
        let mut row_index: HashMap<Monomial, usize> = HashMap::new();
        let mut rows = 0usize;
        let mut index_of = |m: &Monomial, rows: &mut usize| -> usize {
            if let Some(&i) = row_index.get(m) {
                i
            } else {
                let i = *rows;
                row_index.insert(m.clone(), i);
                *rows += 1;
                i
            }
        };
        let mut cols_sparse: Vec<Vec<(usize, Coeff)>> = Vec::with_capacity(columns.len());
        for c in &columns {
            cols_sparse.push(
                c.terms()
                    .map(|(m, v)| (index_of(m, &mut rows), v.clone()))
                    .collect(),
            );
        }
        let rhs_sparse: Vec<(usize, Coeff)> = comp
            .terms()
            .map(|(m, v)| (index_of(m, &mut rows), v.clone()))
            .collect();
        // dense elimination
        let ncols = columns.len();
        let mut mat = vec![vec![Coeff::zero(); ncols + 1]; rows];
        for (j, col) in cols_sparse.iter().enumerate() {
            for (i, v) in col {
                mat[*i][j] = v.clone();
            }
        }
        for (i, v) in &rhs_sparse {
            mat[*i][ncols] = v.clone();
        }
        let solution = solve_exact(&mut mat, ncols)
            .ok_or_else(|| Error::NonIntegral("normal-form system unsolvable".into()))?;
        let mut out = Poly::zero(n);
        for (j, coeff) in solution.iter().enumerate().take(basis_cols) {
            if !coeff.is_zero() {
                out = out.add(&columns[j].scale(coeff));
            }
        }
        Ok(out)
    }

    /// Reduction modulo the equivariant ideal generated by
    /// e_i(x_1..x_n | q) - e_i(y_1..y_n): writes f as a combination of the
    /// staircase y-monomials with x,q coefficients. The input may involve
    /// x, y and q.
    pub fn reduce_equivariant(&self, f: &Poly) -> Result<BTreeMap<ExponentVec, Poly>> {
        if self.n > MAX_N_EQUIVARIANT {
            return Err(Error::UnsupportedSize {
                n: self.n,
                what: "equivariant reduction",
                max: MAX_N_EQUIVARIANT,
            });
        }
        let f = self.prepare(f);
        let n = self.n;
        // rewriting data in y: y_m^{n-m+1} -> (y_m^K - h_K(y_1..y_m))
        //   + sum_{j>=1} (-1)^{j+1} e~_j(x|q) h_{K-j}(y_1..y_m)
        let mut rules: Vec<Poly> = Vec::new();
        for m in 1..=n {
            let k = n - m + 1;
            let x_to_y: BTreeMap<VarId, Poly> =
                (1..=n).map(|i| (VarId::x(i), Poly::var(n, VarId::y(i)))).collect();
            let h_top = classical_h(k, m, n).substitute(&x_to_y);
            let head = Poly::monomial(n, y_power_mono(m, k), coeff_int(1));
            let mut rule = head.sub(&h_top);
            for j in 1..=k {
                let gen = &self.generators[(j - 1) as usize];
                let h_low = classical_h(k - j, m, n).substitute(&x_to_y);
                let sign = if j % 2 == 1 { 1 } else { -1 };
                rule = rule.add(&gen.mul(&h_low).scale_int(sign));
            }
            assert!(rule.coefficient(&y_power_mono(m, k)).is_zero());
            rules.push(rule);
        }

        let mut memo: HashMap<Vec<u32>, Poly> = HashMap::new();
        fn nf_y(
            exps: &[u32],
            n: u32,
            rules: &[Poly],
            memo: &mut HashMap<Vec<u32>, Poly>,
        ) -> Poly {
            if let Some(p) = memo.get(exps) {
                return p.clone();
            }
            let excess = (0..n as usize)
                .rev()
                .find(|&k| exps[k] > n - 1 - k as u32);
            let result = match excess {
                None => {
                    let mut m = Monomial::one();
                    for (i, &e) in exps.iter().enumerate() {
                        m = m.mul(&Monomial::var_pow(VarId::y(i as u32 + 1), e));
                    }
                    Poly::monomial(n, m, coeff_int(1))
                }
                Some(k) => {
                    let m = k as u32 + 1;
                    let pow = n - m + 1;
                    let mut rest = exps.to_vec();
                    rest[k] -= pow;
                    let mut acc = Poly::zero(n);
                    for (mono, c) in rules[(m - 1) as usize].terms() {
                        let (ypart, coeff_mono) = mono.split_family(VarFamily::Y);
                        let mut e = ypart.family_exponents(VarFamily::Y, n);
                        for (i, v) in e.iter_mut().enumerate() {
                            *v += rest[i];
                        }
                        acc = acc.add(&nf_y(&e, n, rules, memo).mul_monomial(&coeff_mono, c));
                    }
                    acc
                }
            };
            memo.insert(exps.to_vec(), result.clone());
            result
        }

        let mut reduced = Poly::zero(n);
        for (mono, c) in f.terms() {
            let (ypart, rest) = mono.split_family(VarFamily::Y);
            let exps = ypart.family_exponents(VarFamily::Y, n);
            reduced = reduced.add(&nf_y(&exps, n, &rules, &mut memo).mul_monomial(&rest, c));
        }
        let mut coeffs: BTreeMap<ExponentVec, Poly> = BTreeMap::new();
        for (mono, c) in reduced.terms() {
            let (ypart, rest) = mono.split_family(VarFamily::Y);
            let i = ExponentVec(ypart.family_exponents(VarFamily::Y, n));
            debug_assert!(i.sub_delta(n));
            coeffs
                .entry(i)
                .or_insert_with(|| Poly::zero(n))
                .add_term(rest, c.clone());
        }
        coeffs.retain(|_, v| !v.is_zero());
        Ok(coeffs)
    }

    /// True when f lies in the equivariant ideal.
    pub fn in_equivariant_ideal(&self, f: &Poly) -> Result<bool> {
        Ok(self.reduce_equivariant(f)?.is_empty())
    }
}

fn power_vec(n: u32, m: u32, k: u32) -> Vec<u32> {
    let mut v = vec![0u32; n as usize];
    v[(m - 1) as usize] = k;
    v
}

fn x_power_mono(m: u32, k: u32) -> Monomial {
    Monomial::var_pow(VarId::x(m), k)
}

fn y_power_mono(m: u32, k: u32) -> Monomial {
    Monomial::var_pow(VarId::y(m), k)
}

/// All q-monomials of the given total q-degree (first alphabet only).
fn q_monomials(n: u32, deg: u32, quantum: bool) -> Vec<Monomial> {
    if !quantum {
        return if deg == 0 { vec![Monomial::one()] } else { vec![] };
    }
    let mut out = Vec::new();
    fn rec(n: u32, i: u32, remaining: u32, current: Monomial, out: &mut Vec<Monomial>) {
        if i == n {
            if remaining == 0 {
                out.push(current);
            }
            return;
        }
        for e in 0..=remaining {
            rec(
                n,
                i + 1,
                remaining - e,
                current.mul(&Monomial::var_pow(VarId::q(i), e)),
                out,
            );
        }
    }
    rec(n, 1, deg, Monomial::one(), &mut out);
    out
}

/// Dense exponent vectors of all x-monomials of a given total degree.
fn x_monomials_of_degree(n: u32, deg: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    fn rec(n: usize, pos: usize, remaining: u32, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if pos == n - 1 {
            current.push(remaining);
            out.push(current.clone());
            current.pop();
            return;
        }
        for e in 0..=remaining {
            current.push(e);
            rec(n, pos + 1, remaining - e, current, out);
            current.pop();
        }
    }
    rec(n as usize, 0, deg, &mut Vec::new(), &mut out);
    out
}

/// Gaussian elimination over the rationals for an augmented matrix; returns
/// any solution of A x = b (columns 0..ncols are A, column ncols is b).
fn solve_exact(mat: &mut [Vec<Coeff>], ncols: usize) -> Option<Vec<Coeff>> {
    let rows = mat.len();
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; ncols];
    let mut r = 0;
    for c in 0..ncols {
        let Some(pr) = (r..rows).find(|&i| !mat[i][c].is_zero()) else {
            continue;
        };
        mat.swap(r, pr);
        let inv = mat[r][c].clone();
        for v in mat[r][c..].iter_mut() {
            *v = &*v / &inv;
        }
        for i in 0..rows {
            if i != r && !mat[i][c].is_zero() {
                let f = mat[i][c].clone();
                for cc in c..=ncols {
                    let sub = &f * &mat[r][cc];
                    mat[i][cc] -= sub;
                }
            }
        }
        pivot_of_col[c] = Some(r);
        r += 1;
        if r == rows {
            break;
        }
    }
    // consistency: no row of the form (0 ... 0 | nonzero)
    for row in mat.iter() {
        if row[..ncols].iter().all(Zero::is_zero) && !row[ncols].is_zero() {
            return None;
        }
    }
    let mut sol = vec![Coeff::zero(); ncols];
    for (c, p) in pivot_of_col.iter().enumerate() {
        if let Some(r) = p {
            sol[c] = mat[*r][ncols].clone();
        }
    }
    Some(sol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    fn p(s: &str, n: u32) -> Poly {
        Poly::parse(s, n).unwrap()
    }

    fn ring(n: u32) -> QuotientRing {
        QuotientRing::new(n, true).unwrap()
    }

    #[test]
    fn basis_and_sizes() {
        assert_eq!(ring(3).dim(), 6);
        assert_eq!(ring(4).dim(), 24);
        assert!(QuotientRing::new(6, true).is_err());
    }

    #[test]
    fn normal_form_examples() {
        let r = ring(3);
        // x1^3 reduces to q1 (2 x1 + x2)
        assert_eq!(r.normal_form_poly(&p("x1^3", 3)), p("2*q1*x1 + q1*x2", 3));
        // basis monomials are fixed
        assert_eq!(r.normal_form_poly(&p("x1^2*x2", 3)), p("x1^2*x2", 3));
        // ideal generators vanish
        for g in r.generators() {
            assert!(r.normal_form_poly(g).is_zero(), "generator {g}");
        }
    }

    #[test]
    fn rewrite_relations_lie_in_the_ideal() {
        // the rewriting heads x_m^{n-m+1} minus their tails must be ideal
        // members; checked against the generator-based linear oracle
        for n in [3u32, 4] {
            let r = QuotientRing::new(n, true).unwrap();
            for m in 1..=n {
                let k = n - m + 1;
                let relation = Poly::x_monomial(n, &power_vec(n, m, k))
                    .sub(&r.rewrite[(m - 1) as usize]);
                let nf = r.normal_form_linear_oracle(&relation).unwrap();
                assert!(nf.is_zero(), "relation at n={n}, m={m} is not in the ideal");
            }
        }
    }

    #[test]
    fn normal_form_matches_linear_oracle() {
        let r3 = ring(3);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..10 {
            let mut f = Poly::zero(3);
            for _ in 0..4 {
                let e1 = rng.gen_range(0..=4u32);
                let e2 = rng.gen_range(0..=3u32);
                let e3 = rng.gen_range(0..=2u32);
                let qd = rng.gen_range(0..=1u32);
                let c = rng.gen_range(-4i64..=4);
                let m = Monomial::var_pow(VarId::x(1), e1)
                    .mul(&Monomial::var_pow(VarId::x(2), e2))
                    .mul(&Monomial::var_pow(VarId::x(3), e3))
                    .mul(&Monomial::var_pow(VarId::q(1), qd));
                f.add_term(m, coeff_int(c));
            }
            let a = r3.normal_form_poly(&f);
            let b = r3.normal_form_linear_oracle(&f).unwrap();
            assert_eq!(a, b, "normal forms disagree for {f}");
        }
        // spot checks at n = 4 in low degree, where the oracle system stays
        // small
        let r4 = ring(4);
        for s in ["x1^5", "x2^4", "x4^3*x1", "x1^2*x2*x3 + q2*x3^2", "x3^2*x2^2"] {
            let f = p(s, 4);
            assert_eq!(
                r4.normal_form_poly(&f),
                r4.normal_form_linear_oracle(&f).unwrap(),
                "normal forms disagree for {s}"
            );
        }
    }

    #[test]
    fn residue_examples() {
        for n in 2..=4u32 {
            let r = ring(n);
            assert_eq!(r.residue(&crate::divdiff::x_delta(n)), Poly::one(n));
        }
        let r = ring(3);
        // all staircase monomials below the top have residue zero
        for i in r.basis() {
            if i.total() < 3 {
                assert!(r.residue(&i.to_poly(3)).is_zero(), "residue of {:?}", i);
            }
        }
        assert_eq!(r.residue(&p("x1^5", 3)), p("q1", 3));
    }

    #[test]
    fn pairing_examples() {
        let r = ring(3);
        assert_eq!(r.pair(&p("x1^2*x2", 3), &p("x1^2", 3)), p("q1", 3));
        assert_eq!(r.pair(&p("x1^2*x2", 3), &p("x1*x2", 3)), p("-2*q1", 3));
        // ideal members pair to zero
        let e2 = quantum_e(2, 3, 3);
        for g in [p("x1^2", 3), p("x1*x2 + q1", 3), p("1", 3)] {
            assert!(r.pair(&e2, &g).is_zero());
        }
    }

    #[test]
    fn pairing_is_bilinear_and_symmetric() {
        let r = ring(3);
        let f = p("x1^2 + q1", 3);
        let g = p("x1*x2 - x2^2", 3);
        let h = p("x1^2*x2", 3);
        assert_eq!(r.pair(&f, &g), r.pair(&g, &f));
        assert_eq!(
            r.pair(&f.add(&h), &g),
            r.pair(&f, &g).add(&r.pair(&h, &g))
        );
    }

    #[test]
    fn normal_form_is_projector() {
        let r = ring(3);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..6 {
            let mut f = Poly::zero(3);
            for _ in 0..3 {
                let e1 = rng.gen_range(0..=3u32);
                let e2 = rng.gen_range(0..=3u32);
                let c = rng.gen_range(-3i64..=3);
                f.add_term(
                    Monomial::var_pow(VarId::x(1), e1).mul(&Monomial::var_pow(VarId::x(2), e2)),
                    coeff_int(c),
                );
            }
            let g = p("x1*x2 + x2^2", 3);
            let nf = |x: &Poly| r.normal_form_poly(x);
            assert_eq!(nf(&nf(&f)), nf(&f));
            assert_eq!(nf(&f.mul(&g)), nf(&nf(&f).mul(&nf(&g))));
        }
    }

    #[test]
    fn jacobian_small() {
        // n=2: det [[1,1],[x2,x1]] = x1 - x2 == 2 x1 modulo the ideal
        let r = QuotientRing::new(2, true).unwrap();
        let h = r.jacobian();
        assert_eq!(h, p("x1 - x2", 2));
        assert_eq!(r.normal_form_poly(&h), p("2*x1", 2));
        // n=3: the normal form is 6 (x1^2 x2 + q1 x1)
        let r3 = ring(3);
        assert_eq!(
            r3.normal_form_poly(&r3.jacobian()),
            p("6*x1^2*x2 + 6*q1*x1", 3)
        );
        // classical limit: n! x^delta
        let c3 = QuotientRing::new(3, false).unwrap();
        assert_eq!(
            c3.normal_form_poly(&c3.jacobian()),
            p("6*x1^2*x2", 3)
        );
    }

    #[test]
    fn residue_agrees_with_trace_route() {
        // Tr(mult by f) = Res(f * Jacobian), the trace form of the residue
        let r = ring(3);
        let h = r.jacobian();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..8 {
            let e1 = rng.gen_range(0..=4u32);
            let e2 = rng.gen_range(0..=2u32);
            let e3 = rng.gen_range(0..=1u32);
            let f = Poly::monomial(
                3,
                Monomial::var_pow(VarId::x(1), e1)
                    .mul(&Monomial::var_pow(VarId::x(2), e2))
                    .mul(&Monomial::var_pow(VarId::x(3), e3)),
                coeff_int(1),
            );
            assert_eq!(r.trace(&f), r.residue(&f.mul(&h)), "trace route for {f}");
        }
        // Res(H) = n!
        assert_eq!(r.residue(&h), Poly::int(3, 6));
    }

    #[test]
    fn classical_gram_matrix_is_unimodular() {
        use num_traits::{One, Signed};
        for n in [3u32] {
            let r = QuotientRing::new(n, false).unwrap();
            let dim = r.dim();
            let mut mat = vec![vec![Coeff::zero(); dim]; dim];
            for a in 0..dim {
                for b in a..dim {
                    let v = r.gram_entry(a, b).constant_term();
                    mat[a][b] = v.clone();
                    mat[b][a] = v;
                }
            }
            // determinant by elimination
            let mut det = Coeff::one();
            for c in 0..dim {
                let piv = (c..dim).find(|&i| !mat[i][c].is_zero()).expect("singular");
                if piv != c {
                    mat.swap(piv, c);
                    det = -det;
                }
                let pv = mat[c][c].clone();
                det *= pv.clone();
                for i in c + 1..dim {
                    let f = &mat[i][c] / &pv;
                    for j in c..dim {
                        let sub = &f * &mat[c][j];
                        mat[i][j] -= sub;
                    }
                }
            }
            assert!(det.abs().is_one(), "Gram determinant {det} at n={n}");
        }
    }

    #[test]
    fn equivariant_generators_reduce_to_zero() {
        let r = ring(3);
        for i in 1..=3u32 {
            let gen = r.generators()[(i - 1) as usize].clone();
            let x_to_y: BTreeMap<VarId, Poly> =
                (1..=3).map(|k| (VarId::x(k), Poly::var(3, VarId::y(k)))).collect();
            let ey = classical_e(i, 3, 3).substitute(&x_to_y);
            let f = gen.sub(&ey);
            assert!(r.in_equivariant_ideal(&f).unwrap(), "generator {i}");
        }
        // a polynomial visibly not in the ideal
        assert!(!r.in_equivariant_ideal(&p("y1", 3)).unwrap());
    }

    #[test]
    fn equivariant_reduction_is_a_y_normal_form() {
        let r = ring(3);
        let f = p("y1^3 + x1*y2^2 + q1*y3", 3);
        let coeffs = r.reduce_equivariant(&f).unwrap();
        for (i, c) in &coeffs {
            assert!(i.sub_delta(3));
            assert!(!c.is_zero());
            assert!(c.only_families(&[VarFamily::X, VarFamily::Q]));
        }
        // reassembling with e_i(y) replaced by quantum generators recovers f
        // modulo the ideal; here we just check idempotence
        let mut reassembled = Poly::zero(3);
        for (i, c) in &coeffs {
            let mut ym = Monomial::one();
            for (k, &e) in i.0.iter().enumerate() {
                ym = ym.mul(&Monomial::var_pow(VarId::y(k as u32 + 1), e));
            }
            reassembled = reassembled.add(&c.mul_monomial(&ym, &coeff_int(1)));
        }
        let again = r.reduce_equivariant(&reassembled).unwrap();
        assert_eq!(coeffs, again);
    }
}
