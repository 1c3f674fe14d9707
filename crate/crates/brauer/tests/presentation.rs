use brauer::presentation::{make_koszul, make_koszul_lambda, make_star, present, Family};
use brauer::ribbon;
use brauer::strmod::MatrixRep;
use brauer::Error;

fn ids(p: &brauer::presentation::Presentation) -> Vec<String> {
    let mut v: Vec<String> = p.arrows().iter().map(|a| a.id.clone()).collect();
    v.sort();
    v
}

#[test]
fn star_quiver() {
    let p = present(&make_star(2, &[2, 2, 2]).unwrap());
    assert_eq!(p.n_q(), 3);
    assert_eq!(ids(&p), vec!["a0", "a1", "a2", "d0", "d1"]);
    let a0 = p.arrow(p.arrow_index("a0").unwrap());
    assert_eq!((a0.source, a0.target), (0, 1));
    let d1 = p.arrow(p.arrow_index("d1").unwrap());
    assert_eq!((d1.source, d1.target), (1, 1));
}

#[test]
fn star_arrow_counts() {
    for (n, m) in [(2usize, vec![2u32, 2, 2]), (2, vec![2, 3]), (3, vec![2, 2]), (1, vec![2, 2, 2]), (3, vec![2, 2, 2, 2])] {
        let p = present(&make_star(n, &m).unwrap());
        let i = m.len() - 1;
        assert_eq!(p.n_q(), n + 1);
        assert_eq!(p.arrows().len(), n + 1 + i);
    }
}

#[test]
fn star_relations() {
    let p = present(&make_star(2, &[2, 3]).unwrap());
    let rel = p.relations();
    let name = |a: &usize| p.arrow(*a).id.clone();
    let t1: Vec<(Vec<String>, Vec<String>)> =
        rel.type1.iter().map(|(a, b)| (a.iter().map(name).collect(), b.iter().map(name).collect())).collect();
    // delta_0^{m_1} = A_0^{m_0}
    assert!(t1.iter().any(|(a, b)| {
        let (x, y) = (a.join(" "), b.join(" "));
        (x == "a0 a1 a2 a0 a1 a2" && y == "d0 d0 d0") || (y == "a0 a1 a2 a0 a1 a2" && x == "d0 d0 d0")
    }));
    let t3: Vec<(String, String)> = rel.type3.iter().map(|(a, b)| (name(a), name(b))).collect();
    assert!(t3.contains(&("a2".into(), "d0".into())));
    assert!(t3.contains(&("d0".into(), "a0".into())));
}

#[test]
fn nakayama_single_loop() {
    let g = ribbon::line_graph(&[2, 1]);
    let p = present(&g);
    assert_eq!(p.n_q(), 1);
    assert_eq!(p.arrows().len(), 1);
    let a = &p.arrows()[0];
    assert_eq!(a.source, a.target);
    assert_eq!(p.dim(), 3);
}

#[test]
fn special_biserial_degrees() {
    for g in [make_star(2, &[2, 2, 2]).unwrap(), make_star(3, &[2, 3]).unwrap(), ribbon::line_graph(&[2, 3, 1, 2])] {
        let p = present(&g);
        for q in 0..p.n_q() {
            let out = p.arrows().iter().filter(|a| a.source == q).count();
            let inn = p.arrows().iter().filter(|a| a.target == q).count();
            assert!(out <= 2 && inn <= 2);
        }
    }
}

#[test]
fn dimension_matches_matrix_projectives() {
    for g in [make_star(2, &[2, 2, 2]).unwrap(), make_star(2, &[2, 3]).unwrap(), make_koszul(2, 2, 3).unwrap().graph().clone()] {
        let p = present(&g);
        let total: usize = (0..p.n_q()).map(|q| MatrixRep::projective(&p, q).dim()).sum();
        assert_eq!(total, p.dim());
        for q in 0..p.n_q() {
            assert!(MatrixRep::projective(&p, q).satisfies_relations(&p));
        }
    }
}

#[test]
fn make_star_shapes_and_errors() {
    let g = make_star(0, &[2, 2]).unwrap();
    assert_eq!(g.n_edges(), 1);
    assert_eq!(g.multiplicities(), vec![2, 2]);
    let g = make_star(2, &[2, 3]).unwrap();
    assert_eq!(g.multiplicities(), vec![1, 1, 2, 3]);
    assert!(matches!(make_star(2, &[3, 2]), Err(Error::BadMultiplicityVector(_))));
    assert!(matches!(make_star(2, &[1, 2]), Err(Error::BadMultiplicityVector(_))));
    assert!(matches!(make_star(1, &[2, 2, 2, 2]), Err(Error::BadMultiplicityVector(_))));
}

#[test]
fn koszul_family() {
    let p = make_koszul(1, 2, 2).unwrap();
    assert_eq!(p.n_q(), 2);
    assert_eq!(ids(&p), vec!["a1", "b1", "d", "g"]);
    let p = make_koszul(2, 2, 3).unwrap();
    assert_eq!(p.graph().multiplicities(), vec![1, 1, 2, 3]);
    assert!(ribbon::recognize_line(p.graph()).is_some());
    for (n, l, m) in [(2, 2, 3), (3, 4, 2), (1, 3, 3)] {
        let k = make_koszul(n, l, m).unwrap();
        let s = ribbon::star_reduce(k.graph()).unwrap();
        let shape = ribbon::recognize_star(&s).unwrap();
        assert_eq!((shape.n, shape.mbar), (n, vec![l.min(m), l.max(m)]));
    }
    let p = make_koszul_lambda(2, 2, 3, 5).unwrap();
    assert!(matches!(p.family(), Family::Koszul { lambda: 5, .. }));
    assert!(make_koszul(0, 2, 2).is_err());
}

#[test]
fn string_builders() {
    let p = present(&make_star(2, &[2, 2, 2]).unwrap());
    let ss = p.star_strings().unwrap();
    assert!(ss.x(2, 2).unwrap().is_trivial());
    assert_eq!(ss.x(0, 2).unwrap().display(&p), "a0 a1");
    assert_eq!(ss.y(0).unwrap().display(&p), "-d0 a0 -d1 a1");
    assert_eq!(ss.a_pow(2, 1).unwrap().display(&p), "a2 a0 a1");
    let q = present(&make_star(1, &[2, 2, 2]).unwrap());
    let ss = q.star_strings().unwrap();
    assert_eq!(ss.z(0).unwrap().display(&q), "-d0 a0 -d1");
    assert!(matches!(ss.y(0), Err(Error::IndexOutOfFamily(_))));
}

#[test]
fn general_graph_arrow_names() {
    let text = r#"{"tree": {"edges": [["a","b"],["b","c"],["b","d"],["d","e"]],
                            "multiplicities": {"a": 2, "b": 3, "d": 2}}}"#;
    let g = ribbon::BrauerGraph::from_json(text).unwrap();
    let p = present(&g);
    assert!(matches!(p.family(), Family::General));
    assert!(p.arrows().iter().all(|a| a.id.starts_with('v') && a.id.contains('p')));
}
