//! Divided difference operators and the classical theory built on them:
//! Schubert polynomials, double Schubert polynomials, the top-operator
//! scalar product, and the constant-term evaluation map.

use std::collections::BTreeMap;

use crate::polyring::{coeff_int, Monomial, Poly, VarFamily, VarId};
use crate::symgroup::Permutation;

/// The divided difference (f - s_i f) / (v_i - v_{i+1}) acting on the given
/// variable family. The quotient is computed term by term, so it is always
/// exact; variables of other families behave as scalars.
pub fn ddiff(i: u32, f: &Poly, family: VarFamily) -> Poly {
    let n = f.context();
    let vi = VarId { family, index: i };
    let vj = VarId { family, index: i + 1 };
    let mut out = Poly::zero(n);
    for (m, c) in f.terms() {
        let a = m.exponent(vi);
        let b = m.exponent(vj);
        if a == b {
            continue;
        }
        let mut rest = Monomial::one();
        for (v, e) in m.iter() {
            if v != vi && v != vj {
                rest = rest.mul(&Monomial::var_pow(v, e));
            }
        }
        // (v_i^a v_{i+1}^b - v_i^b v_{i+1}^a) / (v_i - v_{i+1})
        //   = sum_{k=0}^{a-b-1} v_i^{b+k} v_{i+1}^{a-1-k}        for a > b,
        // and minus the mirrored sum for a < b.
        let (lo, hi, sign) = if a > b { (b, a, 1) } else { (a, b, -1) };
        for k in 0..(hi - lo) {
            let mono = rest
                .mul(&Monomial::var_pow(vi, lo + k))
                .mul(&Monomial::var_pow(vj, hi - 1 - k));
            out.add_term(mono, c * coeff_int(sign));
        }
    }
    out
}

/// Composition along a word: `ddiff_word(&[a1,...,ap], f)` applies the
/// operator for `ap` first. If the word is reduced for w this computes the
/// operator of w; if not, the result is zero.
pub fn ddiff_word(word: &[u32], f: &Poly, family: VarFamily) -> Poly {
    let mut g = f.clone();
    for &a in word.iter().rev() {
        if g.is_zero() {
            break;
        }
        g = ddiff(a, &g, family);
    }
    g
}

/// Operator of a permutation, computed along its canonical reduced word.
pub fn ddiff_w(w: &Permutation, f: &Poly, family: VarFamily) -> Poly {
    ddiff_word(&w.reduced_word(), f, family)
}

/// x^delta = x_1^{n-1} x_2^{n-2} ... x_{n-1}.
pub fn x_delta(n: u32) -> Poly {
    let exps: Vec<u32> = (0..n).map(|k| n - 1 - k).collect();
    Poly::x_monomial(n, &exps)
}

/// The Schubert polynomial of w in the ambient S_n of the permutation.
pub fn schubert(w: &Permutation) -> Poly {
    let n = w.n();
    let chain = w.inverse().compose(&Permutation::longest(n));
    ddiff_w(&chain, &x_delta(n), VarFamily::X)
}

/// Top double Schubert polynomial: product of (x_i + y_j) over i + j <= n.
pub fn double_schubert_top(n: u32) -> Poly {
    let mut p = Poly::one(n);
    for i in 1..=n {
        for j in 1..=n {
            if i + j <= n {
                let f = Poly::var(n, VarId::x(i)).add(&Poly::var(n, VarId::y(j)));
                p = p.mul(&f);
            }
        }
    }
    p
}

/// Double Schubert polynomial, via x-operators on the top polynomial.
pub fn double_schubert(w: &Permutation) -> Poly {
    let n = w.n();
    let chain = w.inverse().compose(&Permutation::longest(n));
    ddiff_w(&chain, &double_schubert_top(n), VarFamily::X)
}

/// Scalar product with values in the symmetric polynomials: the top
/// operator applied to the product.
pub fn scalar_product(f: &Poly, g: &Poly) -> Poly {
    let n = f.context();
    ddiff_w(&Permutation::longest(n), &f.mul(g), VarFamily::X)
}

/// Constant term in the x and y variables; the result involves only q (and
/// t) variables.
pub fn eta(f: &Poly) -> Poly {
    let n = f.context();
    let mut out = Poly::zero(n);
    for (m, c) in f.terms() {
        if !m.has_family(VarFamily::X) && !m.has_family(VarFamily::Y) {
            out.add_term(m.clone(), c.clone());
        }
    }
    out
}

/// eta of the scalar product, as an exact rational (useful for classical
/// pairings of complementary degree, where the result is a constant).
pub fn pair_classical(f: &Poly, g: &Poly) -> Poly {
    eta(&scalar_product(f, g))
}

/// Classical Schubert polynomials for all of S_n, keyed by permutation.
pub fn schubert_table(n: u32) -> BTreeMap<Permutation, Poly> {
    Permutation::all(n)
        .into_iter()
        .map(|w| {
            let s = schubert(&w);
            (w, s)
        })
        .collect()
}
