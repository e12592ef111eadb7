use knotforge::algebra::laurent_mul;
use knotforge::diagram::{braid_closure, connected_sum};
use knotforge::finitetype::region_enumerator;
use knotforge::invariants::{conway, determinant, jones};
use knotforge::notation::{emit_gauss, emit_pd, parse_gauss, parse_pd};
use knotforge::{Diagram, Evaluator, InvariantSpec, Sign};
use proptest::prelude::*;
use proptest::sample::Index;

fn braid() -> impl Strategy<Value = (usize, Vec<i32>)> {
    (2usize..=4).prop_flat_map(|s| {
        let letter = (1..s as i32).prop_flat_map(|g| prop_oneof![Just(g), Just(-g)]);
        (Just(s), prop::collection::vec(letter, 1..=7))
    })
}

fn closure((s, w): &(usize, Vec<i32>)) -> Diagram {
    braid_closure(w, *s).unwrap()
}

fn knot() -> impl Strategy<Value = Diagram> {
    braid().prop_map(|b| closure(&b)).prop_filter("knot", Diagram::is_knot)
}

fn with_moves(d: &Diagram, picks: &[Index]) -> Diagram {
    let mut cur = d.clone();
    for pick in picks {
        let sites = cur.reidemeister_sites();
        cur = cur.apply_reidemeister(*pick.get(&sites)).unwrap();
    }
    cur
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reidemeister_moves_preserve_invariants(b in braid(), picks in prop::collection::vec(any::<Index>(), 1..=3)) {
        let d = closure(&b);
        let moved = with_moves(&d, &picks);
        prop_assert!(moved.validate().is_empty());
        let mut ev = Evaluator::new();
        for spec in ["jones", "conway", "colorings:3", "colorings:4", "components"] {
            let spec: InvariantSpec = spec.parse().unwrap();
            prop_assert_eq!(ev.evaluate(&spec, &d).unwrap(), ev.evaluate(&spec, &moved).unwrap(), "{}", spec);
        }
    }

    #[test]
    fn mirror_inverts_jones(b in braid()) {
        let d = closure(&b);
        let m = d.mirror();
        prop_assert_eq!(m.writhe(), -d.writhe());
        prop_assert_eq!(jones(&m).unwrap(), jones(&d).unwrap().invert_variable());
        prop_assert_eq!(m.mirror(), d);
    }

    #[test]
    fn connected_sum_multiplies(k1 in knot(), k2 in knot()) {
        let s = connected_sum(&k1, &k2, 1, 1).unwrap();
        prop_assert_eq!(s.crossing_count(), k1.crossing_count() + k2.crossing_count());
        prop_assert_eq!(jones(&s).unwrap(), laurent_mul(&jones(&k1).unwrap(), &jones(&k2).unwrap()).unwrap());
        prop_assert_eq!(conway(&s), laurent_mul(&conway(&k1), &conway(&k2)).unwrap());
        prop_assert_eq!(determinant(&s).unwrap(), determinant(&k1).unwrap() * determinant(&k2).unwrap());
    }

    #[test]
    fn mirror_keeps_knot_conway(k in knot()) {
        prop_assert_eq!(conway(&k.mirror()), conway(&k));
    }

    #[test]
    fn crossing_change_is_an_involution(b in braid(), pick in any::<Index>()) {
        let d = closure(&b);
        let c = pick.index(d.crossing_count());
        let once = d.crossing_change(c).unwrap();
        prop_assert_eq!(once.writhe(), d.writhe() - 2 * d.crossings()[c].sign.value());
        prop_assert_eq!(once.crossing_change(c).unwrap(), d);
    }

    #[test]
    fn gauss_round_trip(k in knot()) {
        let back = parse_gauss(&emit_gauss(&k)).unwrap();
        prop_assert!(back.same_diagram(&k));
    }

    #[test]
    fn twists_compose(b in braid(), pick in any::<Index>(), n1 in 0i64..=2, n2 in 0i64..=2, flip in any::<bool>()) {
        let (n1, n2) = if flip { (-n1, -n2) } else { (n1, n2) };
        let d = closure(&b);
        let regions = region_enumerator(&d, 3, 1, false);
        prop_assume!(!regions.is_empty());
        let r = pick.get(&regions);
        let first = d.insert_twist(r, n1).unwrap();
        let again = first.diagram.insert_twist(&first.regions[0], n2).unwrap();
        let direct = d.insert_twist(r, n1 + n2).unwrap();
        prop_assert!(again.diagram.same_diagram(&direct.diagram));
    }

    #[test]
    fn parallel_twists_add_writhe(b in braid(), pick in any::<Index>(), n in -2i64..=2) {
        let d = closure(&b);
        let parallel: Vec<_> = region_enumerator(&d, 3, 1, false)
            .into_iter()
            .filter(|r| r.len() >= 2 && r.strands.iter().all(|s| s.1 == r.strands[0].1))
            .map(|r| if r.strands[0].1 == Sign::Positive { r } else { r.reversed() })
            .collect();
        prop_assume!(!parallel.is_empty());
        let r = pick.get(&parallel);
        let k = r.len() as i64;
        let t = d.insert_twist(r, n).unwrap().diagram;
        prop_assert_eq!(t.writhe() - d.writhe(), n * k * (k - 1));
        prop_assert_eq!(t.crossing_count() as i64 - d.crossing_count() as i64, n.abs() * k * (k - 1));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn pd_round_trip(b in braid()) {
        let d = closure(&b);
        let text = emit_pd(&d);
        prop_assert_eq!(parse_pd(&text).unwrap(), d.clone());
        let c = d.canonical();
        prop_assert_eq!(parse_pd(&emit_pd(&c)).unwrap(), c);
    }
}
