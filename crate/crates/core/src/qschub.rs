//! Quantum double Schubert polynomials and quantum Schubert polynomials.
//!
//! Three independent constructions are provided and cross-validated:
//!
//! 1. the divided-difference route: apply y-operators to the top polynomial
//!    (the product of the generating determinants) and specialize y = 0;
//! 2. an orthogonalization route: solve for the unique staircase-supported
//!    polynomial whose quantum pairings against the factorized quantum
//!    elementary polynomials equal the classical pairings of the classical
//!    Schubert polynomial against the classical elementary polynomials;
//! 3. the expansion route: sum the factorized quantum elementary
//!    polynomials against integer operator coefficients.
//!
//! Route 1 is the default (fastest); the others serve as oracles. The
//! orthogonality conditions alone (Kronecker pairing pattern plus
//! triangularity) do *not* pin the family down - there are spurious
//! solutions - so route 2 pins it with the pairing targets above, which the
//! true family provably satisfies.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::divdiff::{ddiff_w, eta, pair_classical, schubert};
use crate::error::{Error, Result};
use crate::polyring::{coeff_int, schubert_lex_cmp, Coeff, ExponentVec, Monomial, Poly, VarFamily, VarId};
use crate::qring::{QuotientElement, QuotientRing};
use crate::qsym::{delta_poly, FactorIndex, FactorKind};
use crate::symgroup::{Code, Permutation};

const MAX_N_TABLE: u32 = 5;

/// The top quantum double Schubert polynomial: the product over
/// i = 1..n-1 of the generating determinant in x_1..x_i evaluated at
/// t = y_{n-i}.
pub fn qdouble_top(n: u32) -> Poly {
    let mut acc = Poly::one(n);
    for i in 1..n {
        let mut bind = BTreeMap::new();
        bind.insert(VarId::t(1), Poly::var(n, VarId::y(n - i)));
        acc = acc.mul(&delta_poly(i, n).substitute(&bind));
    }
    acc
}

/// Table of quantum double and quantum Schubert polynomials for S_n.
pub struct QSchubertTable {
    n: u32,
    top: Poly,
    doubles: BTreeMap<Permutation, Poly>,
    x_polys: BTreeMap<Permutation, Poly>,
    /// permutation with code equal to the k-th staircase exponent vector
    basis_perms: Vec<Permutation>,
}

impl QSchubertTable {
    pub fn new(n: u32) -> Result<Self> {
        if !(2..=MAX_N_TABLE).contains(&n) {
            return Err(Error::UnsupportedSize { n, what: "quantum Schubert table", max: MAX_N_TABLE });
        }
        let top = qdouble_top(n);
        let w0 = Permutation::longest(n);
        let ys: Vec<VarId> = (1..=n).map(VarId::y).collect();
        let mut doubles = BTreeMap::new();
        let mut x_polys = BTreeMap::new();
        for w in Permutation::all(n) {
            let chain = w.compose(&w0);
            let d = ddiff_w(&chain, &top, VarFamily::Y);
            let x = d.set_zero(&ys);
            assert!(d.is_integral() && x.is_integral(), "non-integral table entry at w={w}");
            doubles.insert(w.clone(), d);
            x_polys.insert(w, x);
        }
        let basis_perms = ExponentVec::all_sub_delta(n)
            .into_iter()
            .map(|i| Code(i.0).perm().expect("staircase vector is a code"))
            .collect();
        Ok(QSchubertTable { n, top, doubles, x_polys, basis_perms })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn top(&self) -> &Poly {
        &self.top
    }

    pub fn double(&self, w: &Permutation) -> &Poly {
        &self.doubles[w]
    }

    pub fn x_poly(&self, w: &Permutation) -> &Poly {
        &self.x_polys[w]
    }

    pub fn x_polys(&self) -> &BTreeMap<Permutation, Poly> {
        &self.x_polys
    }

    pub fn doubles(&self) -> &BTreeMap<Permutation, Poly> {
        &self.doubles
    }

    /// The permutations ordered so that their codes match the staircase
    /// basis order.
    pub fn basis_perms(&self) -> &[Permutation] {
        &self.basis_perms
    }

    /// Expands a monomial-basis quotient element over the quantum Schubert
    /// basis by division-free back-substitution along the triangular change
    /// of basis (the leading staircase monomial of the polynomial of w is
    /// x^{code(w)}).
    pub fn expand_class(&self, ring: &QuotientRing, class: &QuotientElement) -> QuotientElement {
        let n = self.n;
        let dim = ring.dim();
        let mut residual: Vec<Poly> = vec![Poly::zero(n); dim];
        for (i, c) in class.monomial_coeffs() {
            residual[ring.basis_position(i).expect("basis exponent")] = c.clone();
        }
        // coordinates of each Schubert polynomial over the staircase basis
        let mut coeffs: BTreeMap<Permutation, Poly> = BTreeMap::new();
        for pos in (0..dim).rev() {
            if residual[pos].is_zero() {
                continue;
            }
            let w = &self.basis_perms[pos];
            let a = residual[pos].clone();
            let sw = &self.x_polys[w];
            for (mono, c) in sw.terms() {
                let (xpart, rest) = mono.split_family(VarFamily::X);
                let i = ExponentVec(xpart.family_exponents(VarFamily::X, n));
                let p = ring.basis_position(&i).expect("Schubert polynomial stays in the staircase span");
                let sub = a.mul_monomial(&rest, c);
                residual[p] = residual[p].sub(&sub);
            }
            coeffs.insert(w.clone(), a);
        }
        assert!(residual.iter().all(Poly::is_zero));
        coeffs.retain(|_, v| !v.is_zero());
        QuotientElement::QSchubert { n, coeffs }
    }

    /// Expansion of an arbitrary polynomial in the quantum Schubert basis,
    /// with coefficients read off by pairing against the dual basis
    /// elements.
    pub fn expand_qschubert(&self, ring: &QuotientRing, f: &Poly) -> QuotientElement {
        let w0 = Permutation::longest(self.n);
        let mut coeffs = BTreeMap::new();
        for w in Permutation::all(self.n) {
            let dual = &self.x_polys[&w0.compose(&w)];
            let a = ring.pair(f, dual);
            if !a.is_zero() {
                coeffs.insert(w, a);
            }
        }
        QuotientElement::QSchubert { n: self.n, coeffs }
    }
}

/// Quantum double Schubert polynomial of a single permutation.
pub fn qdouble(w: &Permutation) -> Poly {
    let n = w.n();
    let w0 = Permutation::longest(n);
    ddiff_w(&w.compose(&w0), &qdouble_top(n), VarFamily::Y)
}

/// Quantum Schubert polynomial of a single permutation (y = 0
/// specialization of the double polynomial).
pub fn qschubert(w: &Permutation) -> Poly {
    let n = w.n();
    let ys: Vec<VarId> = (1..=n).map(VarId::y).collect();
    qdouble(w).set_zero(&ys)
}

/// Construction 3: expansion over the factorized quantum elementary
/// polynomials with integer operator coefficients,
/// sum over I of e~_I(x) * eta(d_{w w0} x^{delta - I}).
pub fn qschubert_via_elementary(w: &Permutation) -> Poly {
    let n = w.n();
    let w0 = Permutation::longest(n);
    let chain = w.compose(&w0);
    let mut acc = Poly::zero(n);
    for i in ExponentVec::all_sub_delta(n) {
        let comp = i.complement_in_delta(n);
        let coeff = eta(&ddiff_w(&chain, &comp.to_poly(n), VarFamily::X));
        if coeff.is_zero() {
            continue;
        }
        let mut idx = i.0.clone();
        idx.truncate((n - 1) as usize);
        let e_i = FactorIndex::new(idx, FactorKind::QElementary)
            .poly(n)
            .expect("staircase index");
        acc = acc.add(&e_i.mul(&coeff));
    }
    acc
}

/// Construction 2, one permutation: the unique polynomial supported on the
/// staircase monomials (with q coefficients, weighted-homogeneous of degree
/// l(w)) whose quantum pairings against every factorized quantum elementary
/// polynomial equal the classical pairings of the classical Schubert
/// polynomial. Orthogonality and triangularity of the resulting family are
/// asserted afterwards rather than imposed.
pub fn qschubert_orthogonalized(ring: &QuotientRing, w: &Permutation) -> Result<Poly> {
    let n = ring.n();
    assert_eq!(w.n(), n);
    let lw = w.length() as u64;
    let sw = schubert(w);

    // unknowns: (staircase I, q-monomial mu) with |I| + 2|mu| = l(w)
    let mut unknowns: Vec<(ExponentVec, Monomial)> = Vec::new();
    for i in ExponentVec::all_sub_delta(n) {
        let rem = lw as i64 - i.total() as i64;
        if rem < 0 || rem % 2 != 0 {
            continue;
        }
        for mu in q_monomials_of_degree(n, (rem / 2) as u32) {
            unknowns.push((i.clone(), mu));
        }
    }

    // equations: for each J in T, <f, e~_J>_Q = <S_w, e_J> as q-polynomials
    let mut rows: Vec<(Vec<Coeff>, Coeff)> = Vec::new();
    let mut row_index: BTreeMap<Monomial, usize> = BTreeMap::new();
    for j in crate::qsym::all_t_sequences(n) {
        let e_quantum = FactorIndex::new(j.clone(), FactorKind::QElementary).poly(n)?;
        let e_classical = FactorIndex::new(j.clone(), FactorKind::Elementary).poly(n)?;
        let target = eta(&pair_classical(&sw, &e_classical));
        // <x^I q^mu, e~_J>_Q = q^mu * Res(x^I e~_J)
        let mut lhs: Vec<Poly> = Vec::with_capacity(unknowns.len());
        for (i, mu) in &unknowns {
            let r = ring.pair(&i.to_poly(n), &e_quantum);
            lhs.push(r.mul_monomial(mu, &coeff_int(1)));
        }
        // match coefficients of every q-monomial that appears
        row_index.clear();
        let mut local: Vec<(Vec<Coeff>, Coeff)> = Vec::new();
        let mut touch = |m: &Monomial, local: &mut Vec<(Vec<Coeff>, Coeff)>, width: usize| -> usize {
            if let Some(&r) = row_index.get(m) {
                r
            } else {
                let r = local.len();
                row_index.insert(m.clone(), r);
                local.push((vec![Coeff::zero(); width], Coeff::zero()));
                r
            }
        };
        for (col, p) in lhs.iter().enumerate() {
            for (m, c) in p.terms() {
                let r = touch(m, &mut local, unknowns.len());
                local[r].0[col] = c.clone();
            }
        }
        for (m, c) in target.terms() {
            let r = touch(m, &mut local, unknowns.len());
            local[r].1 = c.clone();
        }
        rows.extend(local);
    }

    let ncols = unknowns.len();
    let mut mat: Vec<Vec<Coeff>> = rows
        .into_iter()
        .map(|(mut row, rhs)| {
            row.push(rhs);
            row
        })
        .collect();
    let (solution, unique) = solve_unique(&mut mat, ncols).ok_or_else(|| {
        Error::NonIntegral(format!("orthogonalization system unsolvable at w={w}"))
    })?;
    if !unique {
        return Err(Error::NonIntegral(format!(
            "orthogonalization system underdetermined at w={w}"
        )));
    }
    let mut out = Poly::zero(n);
    for ((i, mu), c) in unknowns.iter().zip(solution.iter()) {
        if !c.is_zero() {
            out = out.add(&i.to_poly(n).mul_monomial(mu, c));
        }
    }
    if !out.is_integral() {
        return Err(Error::NonIntegral(format!("orthogonalized polynomial at w={w}")));
    }
    Ok(out)
}

/// Construction 2, whole table, with the defining conditions of the
/// orthogonalization verified on the result: Kronecker pairing pattern and
/// triangularity with leading monomial x^{code(w)}.
pub fn qschubert_gramschmidt(ring: &QuotientRing, n: u32) -> Result<BTreeMap<Permutation, Poly>> {
    let mut table = BTreeMap::new();
    for w in Permutation::all(n) {
        table.insert(w.clone(), qschubert_orthogonalized(ring, &w)?);
    }
    let w0 = Permutation::longest(n);
    for (u, fu) in &table {
        // triangularity: leading monomial is x^{code}
        let lead = fu
            .terms()
            .map(|(m, _)| m.family_exponents(VarFamily::X, n))
            .max_by(|a, b| schubert_lex_cmp(a, b))
            .expect("nonzero polynomial");
        if lead != u.code().0 || !fu.coefficient(&lead_monomial(&lead)).eq(&coeff_int(1)) {
            return Err(Error::NonIntegral(format!("triangularity violated at w={u}")));
        }
        for (v, fv) in &table {
            let val = ring.pair(fu, fv);
            let expect = if *v == w0.compose(u) { Poly::one(n) } else { Poly::zero(n) };
            if val != expect {
                return Err(Error::NonIntegral(format!(
                    "orthogonality violated at u={u}, v={v}: got {val}"
                )));
            }
        }
    }
    Ok(table)
}

fn lead_monomial(exps: &[u32]) -> Monomial {
    let mut m = Monomial::one();
    for (k, &e) in exps.iter().enumerate() {
        m = m.mul(&Monomial::var_pow(VarId::x(k as u32 + 1), e));
    }
    m
}

fn q_monomials_of_degree(n: u32, deg: u32) -> Vec<Monomial> {
    fn rec(n: u32, i: u32, remaining: u32, current: Monomial, out: &mut Vec<Monomial>) {
        if i == n {
            if remaining == 0 {
                out.push(current);
            }
            return;
        }
        for e in 0..=remaining {
            rec(n, i + 1, remaining - e, current.mul(&Monomial::var_pow(VarId::q(i), e)), out);
        }
    }
    let mut out = Vec::new();
    rec(n, 1, deg, Monomial::one(), &mut out);
    out
}

fn solve_unique(mat: &mut [Vec<Coeff>], ncols: usize) -> Option<(Vec<Coeff>, bool)> {
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
    for row in mat.iter() {
        if row[..ncols].iter().all(Zero::is_zero) && !row[ncols].is_zero() {
            return None;
        }
    }
    let unique = pivot_of_col.iter().all(Option::is_some);
    let mut sol = vec![Coeff::zero(); ncols];
    for (c, p) in pivot_of_col.iter().enumerate() {
        if let Some(r) = p {
            sol[c] = mat[*r][ncols].clone();
        }
    }
    Some((sol, unique))
}

/// Smallest m with f in the span of the Schubert polynomials of S_m:
/// every monomial x^I of f must satisfy I_k <= m - k.
fn minimal_stable_group(f: &Poly) -> u32 {
    let mut m = 1;
    for (mono, _) in f.terms() {
        for (v, e) in mono.iter() {
            if v.family == VarFamily::X {
                m = m.max(v.index + e);
            }
        }
    }
    m
}

/// The quantization map: f -> sum over w of eta(d_w f) S~_w(x), computed in
/// the smallest symmetric group whose Schubert polynomials span f, then
/// restricted back to the ambient context (extra x and q variables set to
/// zero).
pub fn quantize(f: &Poly) -> Result<Poly> {
    let n = f.context();
    if !f.only_families(&[VarFamily::X]) {
        return Err(Error::NonlinearInput);
    }
    if !f.is_integral() {
        return Err(Error::NonIntegral("quantization input".into()));
    }
    let ctx = minimal_stable_group(f).max(2).max(n);
    if ctx > MAX_N_TABLE {
        return Err(Error::UnsupportedSize { n: ctx, what: "quantization embedding", max: MAX_N_TABLE });
    }
    let fe = f.extend_context(ctx);
    let table = QSchubertTable::new(ctx)?;
    let max_len = fe.max_weighted_degree() as u32;
    let mut acc = Poly::zero(ctx);
    for w in Permutation::all(ctx) {
        if w.length() > max_len {
            continue;
        }
        let c = eta(&ddiff_w(&w, &fe, VarFamily::X));
        if c.is_zero() {
            continue;
        }
        acc = acc.add(&table.x_poly(&w).mul(&c));
    }
    // restrict to the original context
    let mut kill: Vec<VarId> = (n + 1..=ctx).map(VarId::x).collect();
    kill.extend((n.max(1)..ctx).map(VarId::q));
    let restricted = acc.set_zero(&kill);
    restricted.restrict_context(n)
}

/// Left side of the quantum Cauchy identity:
/// sum over w of S~_w(x) S_{w w0}(y).
pub fn cauchy_lhs(table: &QSchubertTable) -> Poly {
    let n = table.n();
    let w0 = Permutation::longest(n);
    let x_to_y: BTreeMap<VarId, Poly> =
        (1..=n).map(|i| (VarId::x(i), Poly::var(n, VarId::y(i)))).collect();
    let mut acc = Poly::zero(n);
    for w in Permutation::all(n) {
        let sy = schubert(&w.compose(&w0)).substitute(&x_to_y);
        acc = acc.add(&table.x_poly(&w).mul(&sy));
    }
    acc
}

/// The canonical element C^{(q,q')}(x,y): sum over w of
/// S~_w^{(q)}(x) S~_{w0 w}^{(q')}(y), the second alphabet stored at q-index
/// offset n-1.
pub fn canonical_element(table: &QSchubertTable) -> Poly {
    let n = table.n();
    let w0 = Permutation::longest(n);
    let mut swap: BTreeMap<VarId, VarId> = BTreeMap::new();
    for i in 1..=n {
        swap.insert(VarId::x(i), VarId::y(i));
    }
    for i in 1..n {
        swap.insert(VarId::q(i), VarId::q(n - 1 + i));
    }
    let mut acc = Poly::zero(n);
    for w in Permutation::all(n) {
        let second = table.x_poly(&w0.compose(&w)).rename(&swap);
        acc = acc.add(&table.x_poly(&w).mul(&second));
    }
    acc
}

/// C^{(q,q)}(x,x) = sum over w of S~_w(x) S~_{w0 w}(x); congruent to
/// n! S~_{w0}(x) in the quotient.
pub fn phi(table: &QSchubertTable) -> Poly {
    let n = table.n();
    let w0 = Permutation::longest(n);
    let mut acc = Poly::zero(n);
    for w in Permutation::all(n) {
        acc = acc.add(&table.x_poly(&w).mul(table.x_poly(&w0.compose(&w))));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: u32) -> Poly {
        Poly::parse(s, n).unwrap()
    }

    fn perm(s: &str) -> Permutation {
        Permutation::parse_one_line(s).unwrap()
    }

    fn word(s: &str, n: u32) -> Permutation {
        Permutation::parse_word(s, n).unwrap()
    }

    #[test]
    fn top_polynomials() {
        assert_eq!(qdouble_top(2), p("x1 + y1", 2));
        let expect = p("x1 + y2", 3)
            .mul(&p("x1 + y1", 3))
            .mul(&p("x2 + y1", 3))
            .add(&p("q1*x1 + q1*y2", 3));
        assert_eq!(qdouble_top(3), expect);
    }

    #[test]
    fn s3_doubles_match_the_reference_list() {
        let t = QSchubertTable::new(3).unwrap();
        let cases = [
            ("121", "(x1+y2)*(x1+y1)*(x2+y1) + q1*(x1+y2)"),
            ("21", "(x1+y1)*(x1+y2) - q1"),
            ("12", "(x1+y1)*(x2+y1) + q1"),
            ("1", "x1 + y1"),
            ("2", "x1 + x2 + y1 + y2"),
            ("id", "1"),
        ];
        for (label, formula) in cases {
            let w = word(label, 3);
            let expect = product_formula(formula, 3);
            assert_eq!(t.double(&w), &expect, "double polynomial at word {label}");
        }
    }

    // tiny helper: parse formulas written with parentheses as products
    fn product_formula(s: &str, n: u32) -> Poly {
        // split on top-level + and - of products of parenthesized factors
        let mut acc = Poly::zero(n);
        let mut current = String::new();
        let mut depth = 0;
        let mut sign = 1i64;
        let flush = |acc: &Poly, chunk: &str, sign: i64, n: u32| -> Poly {
            if chunk.trim().is_empty() {
                return acc.clone();
            }
            let mut prod = Poly::int(n, sign);
            for factor in chunk.split('*') {
                let f = factor.trim().trim_start_matches('(').trim_end_matches(')');
                prod = prod.mul(&Poly::parse(f, n).unwrap());
            }
            acc.add(&prod)
        };
        for ch in s.chars() {
            match ch {
                '(' => {
                    depth += 1;
                    current.push(ch);
                }
                ')' => {
                    depth -= 1;
                    current.push(ch);
                }
                '+' if depth == 0 => {
                    acc = flush(&acc, &current, sign, n);
                    current.clear();
                    sign = 1;
                }
                '-' if depth == 0 => {
                    acc = flush(&acc, &current, sign, n);
                    current.clear();
                    sign = -1;
                }
                _ => current.push(ch),
            }
        }
        flush(&acc, &current, sign, n)
    }

    #[test]
    fn s3_x_polynomials() {
        let t = QSchubertTable::new(3).unwrap();
        assert_eq!(t.x_poly(&word("1", 3)), &p("x1", 3));
        assert_eq!(t.x_poly(&word("2", 3)), &p("x1 + x2", 3));
        assert_eq!(t.x_poly(&word("12", 3)), &p("x1*x2 + q1", 3));
        assert_eq!(t.x_poly(&word("21", 3)), &p("x1^2 - q1", 3));
        assert_eq!(t.x_poly(&word("121", 3)), &p("x1^2*x2 + q1*x1", 3));
    }

    #[test]
    fn classical_limit_and_stability() {
        let t4 = QSchubertTable::new(4).unwrap();
        let qs: Vec<VarId> = (1..8).map(VarId::q).collect();
        for (w, d) in t4.doubles() {
            assert_eq!(d.set_zero(&qs), crate::divdiff::double_schubert(w));
        }
        // stability under the embedding of S_3 in S_4
        let t3 = QSchubertTable::new(3).unwrap();
        for w in Permutation::all(3) {
            let lifted = t3.double(&w).extend_context(4);
            assert_eq!(&lifted, t4.double(&w.embed(4)), "stability at w={w}");
        }
    }

    #[test]
    fn leading_monomials_are_codes() {
        for n in [3u32, 4] {
            let t = QSchubertTable::new(n).unwrap();
            for (w, f) in t.x_polys() {
                let lead = f
                    .terms()
                    .map(|(m, _)| m.family_exponents(VarFamily::X, n))
                    .max_by(|a, b| schubert_lex_cmp(a, b))
                    .unwrap();
                assert_eq!(lead, w.code().0, "leading monomial at w={w}");
            }
        }
    }

    #[test]
    fn top_x_polynomial_is_the_staircase_product() {
        for n in [2u32, 3, 4] {
            let t = QSchubertTable::new(n).unwrap();
            let idx: Vec<u32> = (1..n).rev().collect();
            let e_delta = FactorIndex::new(idx, FactorKind::QElementary).poly(n).unwrap();
            assert_eq!(t.x_poly(&Permutation::longest(n)), &e_delta);
        }
    }

    #[test]
    fn elementary_route_matches() {
        for n in [3u32, 4] {
            let t = QSchubertTable::new(n).unwrap();
            for w in Permutation::all(n) {
                assert_eq!(
                    &qschubert_via_elementary(&w),
                    t.x_poly(&w),
                    "expansion route at w={w}, n={n}"
                );
            }
        }
    }

    #[test]
    fn s5_expansion_example() {
        // the length-6 permutation in S_5 labeled by its staircase expansion:
        // signs (+1,-1,-1,-1,+1,+1) on the indices 2211, 2220, 2301, 3111,
        // 3120, 4101
        let w = perm("51423");
        assert_eq!(w.compose(&Permutation::longest(5)), perm("32415"));
        assert_eq!(perm("32415").reduced_word(), vec![1, 2, 1, 3]);
        let expect: Vec<(Vec<u32>, i64)> = vec![
            (vec![2, 2, 1, 1], 1),
            (vec![2, 2, 2, 0], -1),
            (vec![2, 3, 0, 1], -1),
            (vec![3, 1, 1, 1], -1),
            (vec![3, 1, 2, 0], 1),
            (vec![4, 1, 0, 1], 1),
        ];
        let mut acc = Poly::zero(5);
        for (idx, c) in &expect {
            let e = FactorIndex::new(idx.clone(), FactorKind::QElementary).poly(5).unwrap();
            acc = acc.add(&e.scale_int(*c));
        }
        assert_eq!(qschubert_via_elementary(&w), acc);
        // and the leading monomial is x^{code(w)}
        let lead = acc
            .terms()
            .map(|(m, _)| m.family_exponents(VarFamily::X, 5))
            .max_by(|a, b| schubert_lex_cmp(a, b))
            .unwrap();
        assert_eq!(lead, w.code().0);
    }

    #[test]
    fn orthogonalization_route_matches_n3() {
        let ring = QuotientRing::new(3, true).unwrap();
        let t = QSchubertTable::new(3).unwrap();
        let gs = qschubert_gramschmidt(&ring, 3).unwrap();
        for (w, f) in &gs {
            assert_eq!(f, t.x_poly(w), "orthogonalization route at w={w}");
        }
    }

    #[test]
    fn quantize_examples() {
        // linear polynomials and constants are unchanged
        assert_eq!(quantize(&p("1", 3)).unwrap(), p("1", 3));
        assert_eq!(quantize(&p("x1 + 2*x2", 3)).unwrap(), p("x1 + 2*x2", 3));
        // x1^2 is a single classical Schubert polynomial, so its
        // quantization is the corresponding quantum one
        assert_eq!(quantize(&p("x1^2", 3)).unwrap(), p("x1^2 - q1", 3));
        // embedding: x1^3 needs S_4
        let f = p("x1^3", 3);
        let quantized = quantize(&f).unwrap();
        assert_eq!(quantized.context(), 3);
        // q=0 recovers the input
        let qs: Vec<VarId> = (1..6).map(VarId::q).collect();
        assert_eq!(quantized.set_zero(&qs), f);
    }

    #[test]
    fn quantize_elementary() {
        let n = 3;
        for i in crate::qsym::all_t_sequences(n) {
            let e = FactorIndex::new(i.clone(), FactorKind::Elementary).poly(n).unwrap();
            let eq = FactorIndex::new(i.clone(), FactorKind::QElementary).poly(n).unwrap();
            assert_eq!(quantize(&e).unwrap(), eq, "quantization of index {i:?}");
        }
    }

    #[test]
    fn cauchy_identity_n3() {
        let t = QSchubertTable::new(3).unwrap();
        assert_eq!(cauchy_lhs(&t), t.top().clone());
    }

    #[test]
    fn expand_class_round_trip() {
        let ring = QuotientRing::new(3, true).unwrap();
        let t = QSchubertTable::new(3).unwrap();
        let f = p("x1^3 + x1*x2 - q1*x1", 3);
        let nf = ring.normal_form(&f);
        let sch = t.expand_class(&ring, &nf);
        // reassemble
        let mut acc = Poly::zero(3);
        for (w, c) in sch.schubert_coeffs() {
            acc = acc.add(&c.mul(t.x_poly(w)));
        }
        assert_eq!(ring.normal_form(&acc), nf);
        // x1^3 expands to q1 S~_{s1} + q1 S~_{s2}
        let e = t.expand_qschubert(&ring, &p("x1^3", 3));
        assert_eq!(e.schubert_coeff(&perm("213")), p("q1", 3));
        assert_eq!(e.schubert_coeff(&perm("132")), p("q1", 3));
        assert_eq!(e.schubert_coeff(&perm("321")), Poly::zero(3));
    }

    #[test]
    fn canonical_element_two_alphabets() {
        // C^{(q,q')}(x,y) equals the classical scalar product, taken in a
        // third alphabet z (realized by the t family), of the two top
        // polynomials S~^{(q)}_{w0}(x,z) and S~^{(q')}_{w0}(y,z)
        let n = 3;
        let t = QSchubertTable::new(n).unwrap();
        let c = canonical_element(&t);
        let mut swap1: BTreeMap<VarId, VarId> = BTreeMap::new();
        for i in 1..=n {
            swap1.insert(VarId::y(i), VarId::t(i));
        }
        let a = t.top().rename(&swap1);
        let mut swap2: BTreeMap<VarId, VarId> = BTreeMap::new();
        for i in 1..=n {
            swap2.insert(VarId::x(i), VarId::y(i));
            swap2.insert(VarId::y(i), VarId::t(i));
        }
        for i in 1..n {
            swap2.insert(VarId::q(i), VarId::q(n - 1 + i));
        }
        let b = t.top().rename(&swap2);
        let product = crate::divdiff::ddiff_w(&Permutation::longest(n), &a.mul(&b), VarFamily::T);
        // the z pairing leaves no t variables behind
        assert!(product.only_families(&[VarFamily::X, VarFamily::Y, VarFamily::Q]));
        assert_eq!(c, product);
    }

    #[test]
    fn phi_is_n_factorial_times_top() {
        let n = 3;
        let ring = QuotientRing::new(n, true).unwrap();
        let t = QSchubertTable::new(n).unwrap();
        let lhs = ring.normal_form_poly(&phi(&t));
        let rhs = ring.normal_form_poly(&t.x_poly(&Permutation::longest(n)).scale_int(6));
        assert_eq!(lhs, rhs);
    }
}
