use brauer::ribbon::{self, BrauerGraph, GraphData, GrowthClass};
use brauer::presentation::{make_koszul, make_star};
use brauer::Error;

fn single_edge(m1: u32, m2: u32) -> BrauerGraph {
    ribbon::line_graph(&[m1, m2])
}

#[test]
fn validate_smallest_legal_graph() {
    let g = single_edge(1, 1);
    assert!(ribbon::validate(g.data()).ok());
}

#[test]
fn validate_reports_fixed_point_and_disconnection() {
    let text = r#"{
        "vertices": [{"id": "u", "multiplicity": 1}, {"id": "v", "multiplicity": 1}],
        "half_edges": ["h", "k"],
        "attach": {"h": "u", "k": "v"},
        "pairing": {"h": "h", "k": "k"},
        "cyclic_orders": {"u": ["h"], "v": ["k"]}
    }"#;
    let r = ribbon::validate(&GraphData::from_json(text).unwrap());
    assert!(r.violations.iter().any(|v| v == "pairing has fixed point h"));

    let two = r#"{
        "vertices": [{"id": "a", "multiplicity": 1}, {"id": "b", "multiplicity": 1},
                     {"id": "c", "multiplicity": 1}, {"id": "d", "multiplicity": 1}],
        "half_edges": ["1", "2", "3", "4"],
        "attach": {"1": "a", "2": "b", "3": "c", "4": "d"},
        "pairing": {"1": "2", "2": "1", "3": "4", "4": "3"},
        "cyclic_orders": {"a": ["1"], "b": ["2"], "c": ["3"], "d": ["4"]}
    }"#;
    let r = ribbon::validate(&GraphData::from_json(two).unwrap());
    assert!(r.violations.iter().any(|v| v == "graph not connected"), "{:?}", r.violations);
    assert!(matches!(BrauerGraph::from_json(two), Err(Error::InvalidGraph(_))));
}

#[test]
fn duplicate_keys_and_zero_multiplicity_are_rejected() {
    let dup = r#"{"tree": {"edges": [["a","b"]], "multiplicities": {"a": 2, "a": 3}}}"#;
    assert!(matches!(GraphData::from_json(dup), Err(Error::Format(_))));
    let zero = r#"{"tree": {"edges": [["a","b"]], "multiplicities": {"a": 0}}}"#;
    let r = ribbon::validate(&GraphData::from_json(zero).unwrap());
    assert!(!r.ok());
}

#[test]
fn json_round_trip() {
    let g = make_star(2, &[2, 2, 2]).unwrap();
    let back = BrauerGraph::from_json(&g.data().to_json()).unwrap();
    assert_eq!(back.data(), g.data());
}

#[test]
fn green_walks_of_stars_and_edges() {
    let w = make_star(2, &[2, 2, 2]).unwrap();
    let walks = w.green_walks();
    assert_eq!(walks.len(), 1);
    assert_eq!(walks[0].len(), 6);
    let e = single_edge(1, 1);
    assert_eq!(e.green_walks().iter().map(|x| x.len()).collect::<Vec<_>>(), vec![2]);
}

#[test]
fn double_stepped_walks() {
    let w = make_star(2, &[2, 2, 2]).unwrap();
    assert_eq!(w.double_stepped_walks().iter().map(|x| x.len()).collect::<Vec<_>>(), vec![3, 3]);
    let e = single_edge(1, 1);
    assert_eq!(e.double_stepped_walks().iter().map(|x| x.len()).collect::<Vec<_>>(), vec![1, 1]);
}

#[test]
fn faces_of_trees() {
    assert_eq!(make_star(3, &[2, 2]).unwrap().perimeters(), vec![8]);
    assert_eq!(single_edge(1, 1).perimeters(), vec![2]);
    let g = make_star(2, &[2, 2, 2]).unwrap();
    for f in g.faces() {
        assert_eq!(f.boundary.len(), 2 * f.perimeter);
        for k in (0..f.boundary.len()).step_by(2) {
            assert_eq!(f.boundary[k + 1], g.sigma(f.boundary[k]));
            assert_eq!(f.boundary[(k + 2) % f.boundary.len()], g.pair(f.boundary[k + 1]));
        }
    }
}

#[test]
fn derived_equivalence_examples() {
    let path = ribbon::line_graph(&[2, 2, 2, 1]);
    let star = make_star(2, &[2, 2, 2]).unwrap();
    let r = ribbon::derived_equivalent(&path, &star);
    assert!(r.equivalent);
    assert_eq!(r.criteria.len(), 6);
    let a = ribbon::line_graph(&[2, 2, 1]);
    let b = ribbon::line_graph(&[3, 1, 1]);
    let r = ribbon::derived_equivalent(&a, &b);
    assert!(!r.equivalent);
    assert!(r.criteria.iter().any(|c| c.name == "multiplicities" && !c.ok));
}

#[test]
fn star_reduction_examples() {
    let s = ribbon::star_reduce(&ribbon::line_graph(&[2, 2, 2, 1])).unwrap();
    assert_eq!(s.data(), make_star(2, &[2, 2, 2]).unwrap().data());
    let star = make_star(2, &[2, 3]).unwrap();
    assert_eq!(ribbon::star_reduce(&star).unwrap().data(), star.data());
    let t = ribbon::line_graph(&[3, 2, 1, 1]);
    let s = ribbon::star_reduce(&t).unwrap();
    assert_eq!(s.data(), make_star(2, &[2, 3]).unwrap().data());
    assert!(ribbon::derived_equivalent(&t, &s).equivalent);
}

#[test]
fn star_reduce_rejects_cycles() {
    let text = r#"{"tree": {"edges": [["a","b"],["b","c"],["c","a"]]}}"#;
    let g = BrauerGraph::from_json(text).unwrap();
    assert_eq!(ribbon::star_reduce(&g).unwrap_err(), Error::NotATree);
}

#[test]
fn growth_classes() {
    assert_eq!(ribbon::growth_class(&ribbon::line_graph(&[2, 2, 1, 1])), GrowthClass::OneDomestic);
    assert_eq!(ribbon::growth_class(&make_star(2, &[2, 2, 2]).unwrap()), GrowthClass::NonPolynomial);
    assert_eq!(ribbon::growth_class(&ribbon::line_graph(&[1, 1, 1])), GrowthClass::Finite);
    let k = make_koszul(2, 2, 2).unwrap();
    assert_eq!(ribbon::growth_class(k.graph()), GrowthClass::OneDomestic);
    let k = make_koszul(2, 2, 3).unwrap();
    assert_eq!(ribbon::growth_class(k.graph()), GrowthClass::NonPolynomial);
}

#[test]
fn exceptional_edges_of_stars() {
    // edge names are the centre half-edges "j+"
    let names = |g: &BrauerGraph| ribbon::exceptional_edges(g).into_iter().map(|e| g.edge_name(e).to_string()).collect::<Vec<_>>();
    assert_eq!(names(&make_star(2, &[2, 2, 2]).unwrap()), vec!["2+"]);
    assert_eq!(names(&make_star(2, &[2, 3]).unwrap()), vec!["1+", "2+"]);
    assert!(names(&make_star(1, &[2, 2, 2]).unwrap()).is_empty());
    assert!(names(&single_edge(2, 2)).is_empty());
}

#[test]
fn simple_and_radical_components() {
    let w = make_star(2, &[2, 2, 2]).unwrap();
    assert!(ribbon::simple_rad_same_component(&w, 0, 0).unwrap());
    let w = make_star(2, &[2, 3]).unwrap();
    assert!(ribbon::simple_rad_same_component(&w, 0, 0).unwrap());
    let w = make_star(2, &[3, 3]).unwrap();
    assert!(!ribbon::simple_rad_same_component(&w, 0, 0).unwrap());
    let w = make_star(2, &[2, 2, 2]).unwrap();
    assert_eq!(ribbon::simple_rad_same_component(&w, 2, 2).unwrap_err(), Error::ExceptionalEdgeArgument(2));
}

#[test]
fn natural_ordering_of_ids() {
    use std::cmp::Ordering;
    assert_eq!(ribbon::natural_cmp("2+", "10+"), Ordering::Less);
    assert_eq!(ribbon::natural_cmp("a", "b"), Ordering::Less);
}
