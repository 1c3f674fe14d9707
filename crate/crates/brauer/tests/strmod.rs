use brauer::linalg;
use brauer::strmod::{self, parse_word, MatrixRep, StringModule};
use brauer::verify::star;
use brauer::Error;

#[test]
fn parse_examples() {
    let p = star(2, &[2, 2, 2]);
    let w = parse_word("a0 a1", &p).unwrap();
    assert!(w.same_module(&p.star_strings().unwrap().x(0, 2).unwrap(), &p));
    assert_eq!(w.dim(), 3);
    assert!(matches!(parse_word("d0 a0", &p), Err(Error::ZeroSubpath(_))));
    assert!(matches!(parse_word("a0 -a0", &p), Err(Error::InverseCancellation(_, _))));
    assert!(matches!(parse_word("a0 a2", &p), Err(Error::NonComposable(_, _))));
    assert!(matches!(parse_word("q7", &p), Err(Error::UnknownArrow(_))));
    assert_eq!(parse_word("(a0 a1 a2)", &p).unwrap_err(), Error::BandModule);
    // A_0^{m_0} is zero in the socle quotient
    assert!(matches!(parse_word("a0 a1 a2 a0 a1 a2", &p), Err(Error::ZeroSubpath(_))));
}

#[test]
fn canonical_form_is_an_involution_invariant() {
    let p = star(2, &[2, 3]);
    for w in strmod::enumerate_words(&p, 6) {
        let inv = w.inverse(&p);
        assert_eq!(w.canonical(&p), inv.canonical(&p));
        assert_eq!(inv.inverse(&p), w);
        assert_eq!(StringModule::new(&p, &w), StringModule::new(&p, &inv));
    }
}

#[test]
fn peaks_and_deeps() {
    let p = star(2, &[2, 2, 2]);
    let m = StringModule::parse("-d0 a0 -d1 a1", &p).unwrap();
    assert_eq!(m.dim(), 5);
    let mut top = m.top(&p);
    top.sort_unstable();
    assert_eq!(top, vec![0, 1]);
    let mut soc = m.socle(&p);
    soc.sort_unstable();
    assert_eq!(soc, vec![0, 1, 2]);
}

#[test]
fn endomorphisms_of_tube_diagonal_strings() {
    let p = star(2, &[2, 2, 2]);
    let ss = p.star_strings().unwrap();
    let x = StringModule::new(&p, &ss.x(2, 2).unwrap());
    assert_eq!(strmod::canonical_homs(&p, &x, &x).len(), 1);
    let (n, i) = (ss.n(), ss.i());
    for j in 0..i {
        let w = ss.concat(&[ss.y(j).unwrap(), ss.x(i, n).unwrap()]).unwrap();
        let m = StringModule::new(&p, &w);
        let expected = 1 + (j..i).map(|l| ss.m(l + 1) as usize - 1).sum::<usize>();
        assert_eq!(strmod::canonical_homs(&p, &m, &m).len(), expected);
    }
    let (e0, e2) = (StringModule::simple(&p, 0), StringModule::simple(&p, 2));
    assert!(strmod::canonical_homs(&p, &e0, &e2).is_empty());
}

#[test]
fn hom_matrices() {
    let p = star(2, &[2, 2, 2]);
    let d = StringModule::parse("-d0", &p).unwrap();
    let rep = MatrixRep::from_word(&p, d.word());
    let homs = strmod::canonical_homs(&p, &d, &d);
    assert_eq!(homs.len(), 2);
    for h in &homs {
        let f = strmod::hom_matrix(h, 2, 2);
        assert!(strmod::intertwines(&f, &rep, &rep));
        assert_eq!(linalg::rank_dense(&f), h.rank());
    }
    let id = homs.iter().find(|h| h.rank() == 2).unwrap();
    assert_eq!(strmod::hom_matrix(id, 2, 2), vec![vec![1, 0], vec![0, 1]]);
    let nil = homs.iter().find(|h| h.rank() == 1).unwrap();
    let f = strmod::hom_matrix(nil, 2, 2);
    assert!(linalg::is_zero(&linalg::matmul(&f, &f)));
}

#[test]
fn oracle_examples() {
    let p = star(2, &[2, 2, 2]);
    let rep = |w: &str| MatrixRep::from_word(&p, &parse_word(w, &p).unwrap());
    assert_eq!(strmod::oracle_hom_dim(&p, &rep("e2"), &rep("e2")), 1);
    assert_eq!(strmod::oracle_hom_dim(&p, &rep("a0"), &rep("a1")), 0);
    assert_eq!(strmod::oracle_hom_dim(&p, &rep("a1"), &rep("a0")), 1);
    for q in 0..p.n_q() {
        assert!(MatrixRep::projective(&p, q).satisfies_relations(&p));
    }
}

#[test]
fn canonical_homs_match_oracle_short_words() {
    for p in [star(2, &[2, 3]), star(1, &[2, 2, 2]), brauer::presentation::make_koszul(2, 2, 3).unwrap()] {
        let words = strmod::enumerate_words(&p, 5);
        let reps: Vec<MatrixRep> = words.iter().map(|w| MatrixRep::from_word(&p, w)).collect();
        for (a, wa) in words.iter().enumerate() {
            assert!(reps[a].satisfies_relations(&p));
            assert_eq!(reps[a].dims(&p), wa.dim_vector(&p));
            for (b, wb) in words.iter().enumerate() {
                assert_eq!(strmod::canonical_homs_words(&p, wa, wb).len(), strmod::oracle_hom_dim(&p, &reps[a], &reps[b]), "{} -> {}", wa.display(&p), wb.display(&p));
            }
        }
    }
}

#[test]
fn maps_through_projectives() {
    let p = star(2, &[2, 2, 2]);
    let s2 = StringModule::simple(&p, 2);
    let (rad, _) = strmod::radical_word(&p, 2).unwrap();
    assert_eq!(rad.display(&p), "a0 a1 a2 a0 a1");
    let (top, _) = strmod::top_quotient_word(&p, 2);
    assert!(top.same_module(&parse_word("a2 a0 a1 a2 a0", &p).unwrap(), &p));
    let ph = strmod::proj_canonical_homs(&p, s2.word(), 2);
    assert_eq!(ph.into.len(), 1);
    assert_eq!(ph.out_of.len(), 1);
    let s0 = StringModule::simple(&p, 0);
    let ph = strmod::proj_canonical_homs(&p, s0.word(), 2);
    assert_eq!(ph.into.len() + ph.out_of.len(), 0);
}
