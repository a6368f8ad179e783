use qschub_core::polyring::{schubert_lex_cmp, Poly, VarFamily};
use qschub_core::qschub::{qschubert_via_elementary, QSchubertTable};
use qschub_core::symgroup::Permutation;

fn main() {
    // leading monomials at n=3,4 via the divided-difference route
    for n in [3u32, 4] {
        let t = QSchubertTable::new(n).unwrap();
        for (w, f) in t.x_polys() {
            let lead = f
                .terms()
                .map(|(m, _)| m.family_exponents(VarFamily::X, n))
                .max_by(|a, b| schubert_lex_cmp(a, b))
                .unwrap();
            if lead != w.code().0 {
                println!("n={n} w={w} code={:?} lead={:?} poly={}", w.code().0, lead, f);
            }
        }
    }
    // s5 expansion
    let w = Permutation::parse_one_line("51423").unwrap();
    let f = qschubert_via_elementary(&w);
    println!("S~ via elementary for 51423 has {} terms", f.num_terms());
    let w2 = Permutation::parse_one_line("24531").unwrap();
    let f2 = qschubert_via_elementary(&w2);
    println!("S~ via elementary for 24531 has {} terms", f2.num_terms());
    for (v, g) in [(&w, &f), (&w2, &f2)] {
        let lead = g
            .terms()
            .map(|(m, _)| m.family_exponents(VarFamily::X, 5))
            .max_by(|a, b| schubert_lex_cmp(a, b))
            .unwrap();
        println!("w={v} code={:?} lead={:?}", v.code().0, lead);
    }
    // compare against expected sum for both readings
    use qschub_core::qsym::{FactorIndex, FactorKind};
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
    println!("expected-sum == via_elementary(51423): {}", acc == f);
    println!("expected-sum == via_elementary(24531): {}", acc == f2);
}
