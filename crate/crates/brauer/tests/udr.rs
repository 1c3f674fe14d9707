use brauer::homology;
use brauer::ribbon::{self, BrauerGraph};
use brauer::strmod::{parse_word, StringModule};
use brauer::udr::{self, Ladder, TreeModule, UdrClass};
use brauer::verify::star;
use brauer::Error;

fn classify(p: &brauer::presentation::Presentation, w: &str) -> udr::Classification {
    udr::classify(p, &StringModule::parse(w, p).unwrap()).unwrap()
}

#[test]
fn class_display() {
    assert_eq!(UdrClass::Base.to_string(), "k");
    assert_eq!(UdrClass::PowerSeries.to_string(), "k[[x]]");
    assert_eq!(UdrClass::truncated(3).to_string(), "k[[x]]/(x^3)");
    assert_eq!(UdrClass::truncated(1), UdrClass::Base);
    assert!(!UdrClass::Unknown("x".into()).is_ring());
}

#[test]
fn tube_rows() {
    let p = star(2, &[2, 2, 2]);
    assert_eq!(classify(&p, "e2").class, UdrClass::Base);
    assert_eq!(classify(&p, "-d1 a1").class, UdrClass::Base);
    let c = classify(&p, "-d0 a0 -d1 a1");
    assert_eq!(c.class, UdrClass::PowerSeries);
    assert!(c.rules().contains(&"tube-distance"));
    assert!(c.evidence.iter().any(|e| e.rule == "tube-closed-form" && e.detail.ends_with("agrees: true")));
}

#[test]
fn ext_vanishing_gives_base() {
    let p = star(2, &[2, 2, 2]);
    let c = classify(&p, "e2");
    assert_eq!(c.ext1_dim, Some(0));
    assert_eq!(c.class, UdrClass::Base);
    assert!(c.rules().contains(&"ext-vanishing"));
}

#[test]
fn simple_component_rows() {
    let p = star(2, &[2, 2, 2]);
    let c = udr::classify(&p, &StringModule::simple(&p, 0)).unwrap();
    assert_eq!(c.class, UdrClass::TruncatedPoly(2));
    assert!(c.rules().contains(&"omega-reduction"));
    let q = star(2, &[2, 3]);
    let ss = q.star_strings().unwrap();
    assert_eq!(udr::classify(&q, &StringModule::simple(&q, 0)).unwrap().class, UdrClass::TruncatedPoly(3));
    let m0 = StringModule::new(&q, &ss.x(1, 0).unwrap());
    assert_eq!(udr::classify(&q, &m0).unwrap().class, UdrClass::TruncatedPoly(2));
}

#[test]
fn classification_is_omega_invariant() {
    let p = star(2, &[2, 2, 2]);
    for w in ["e0", "e1", "e2", "-d0 a0 -d1 a1", "-d1 a1"] {
        let m = StringModule::parse(w, &p).unwrap();
        let a = udr::classify(&p, &m).unwrap().class;
        let b = udr::classify(&p, &homology::omega(&p, &m).unwrap()).unwrap().class;
        let c = udr::classify(&p, &homology::omega_inv(&p, &m).unwrap()).unwrap().class;
        assert_eq!((&a, &a), (&b, &c), "{w}");
    }
}

#[test]
fn outside_coverage_is_unknown() {
    let p = star(3, &[2, 2]);
    let c = udr::classify(&p, &StringModule::simple(&p, 0)).unwrap();
    assert!(!c.class.is_ring());
    assert!(c.address.is_none());
}

#[test]
fn finite_ladder() {
    let q = star(2, &[2, 3]);
    let ss = q.star_strings().unwrap();
    let s0 = StringModule::simple(&q, 0);
    let ws = vec![s0.word().clone(), ss.delta_pow(0, 1, true).unwrap(), ss.delta_pow(0, 2, true).unwrap()];
    let v = udr::verify_ladder(&q, &s0, &Ladder::Finite(ws), None).unwrap();
    assert_eq!(v.class, UdrClass::TruncatedPoly(3));
    assert!(v.complete);
}

#[test]
fn template_ladder() {
    let p = star(2, &[2, 2, 2]);
    let ss = p.star_strings().unwrap();
    let (n, i) = (ss.n(), ss.i());
    let prefix = ss.concat(&[ss.y(0).unwrap(), ss.x(i, n).unwrap()]).unwrap();
    let block = ss.concat(&[ss.x(i, 0).unwrap(), ss.y(0).unwrap(), ss.x(i, n).unwrap()]).unwrap();
    let m = StringModule::new(&p, &prefix);
    let v = udr::verify_ladder(&p, &m, &Ladder::Template { prefix, block }, Some(3)).unwrap();
    assert_eq!(v.class, UdrClass::PowerSeries);
    assert!(!v.complete);
    assert_eq!(v.depth, 3);
}

#[test]
fn broken_ladder_reports_the_failing_hypothesis() {
    let q = star(2, &[2, 3]);
    let s0 = StringModule::simple(&q, 0);
    let broken = Ladder::Finite(vec![s0.word().clone(), parse_word("a2", &q).unwrap()]);
    assert_eq!(
        udr::verify_ladder(&q, &s0, &broken, None).unwrap_err(),
        Error::HypothesisFailed { condition: "epimorphism".into(), l: 1 }
    );
    let empty = Ladder::Finite(vec![]);
    assert!(empty.word(&q, 0).is_err());
}

#[test]
fn tree_classification() {
    let r = udr::classify_tree(&ribbon::line_graph(&[2, 2, 2, 1]), &TreeModule::Tube { d: 2 }).unwrap();
    assert_eq!(r.classification.class, UdrClass::PowerSeries);
    assert_eq!(r.star, "W_{2,(2,2,2)}");
    let r = udr::classify_tree(&ribbon::line_graph(&[2, 1, 4]), &TreeModule::Diagonal { t: 0, j: 1 }).unwrap();
    assert_eq!(r.classification.class, UdrClass::TruncatedPoly(4));
    let r = udr::classify_tree(&ribbon::line_graph(&[2, 2, 2, 1]), &TreeModule::Word("e0".into())).unwrap();
    assert_eq!(r.classification.class, UdrClass::TruncatedPoly(2));
}

#[test]
fn tree_classification_errors() {
    let cyc = BrauerGraph::from_json(r#"{"tree": {"edges": [["a","b"],["b","c"],["c","a"]]}}"#).unwrap();
    assert_eq!(udr::classify_tree(&cyc, &TreeModule::Tube { d: 0 }).unwrap_err(), Error::NotATree);
    let dom = ribbon::line_graph(&[2, 2, 1, 1]);
    assert!(matches!(udr::classify_tree(&dom, &TreeModule::Tube { d: 0 }), Err(Error::GrowthClassUnsupported(_))));
}
