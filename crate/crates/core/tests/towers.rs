use towerforge::fields::{base_field, FieldElem};
use towerforge::polys::Var;
use towerforge::primes::Prime;
use towerforge::towers::{
    dv_reports, genus_bound_holds, genus_e, genus_f, make_tower, reports_to_csv, TowerKind,
    TowerSpec,
};

fn tower(kind: TowerKind, q: u64, l: &str) -> TowerSpec {
    make_tower(kind, q, Some(l), None, None, None).unwrap()
}

/// Chains found by evaluating `R(a, b)` for every `b` in `K` at each step.
fn naive_chains(t: &TowerSpec, a: FieldElem, n: usize) -> Vec<Vec<FieldElem>> {
    let k = t.field();
    let mut layer = vec![vec![a]];
    for _ in 0..n {
        let mut next = Vec::new();
        for chain in &layer {
            let x = *chain.last().unwrap();
            for y in k.elements().unwrap() {
                if t.relation()
                    .eval(&[(Var::X, x), (Var::Y, y)])
                    .unwrap()
                    .is_zero()
                {
                    let mut c = chain.clone();
                    c.push(y);
                    next.push(c);
                }
            }
        }
        layer = next;
    }
    layer
}

#[test]
fn fibers_agree_with_naive_scan() {
    for (kind, q, l) in [
        (TowerKind::E, 2, "T + 1"),
        (TowerKind::F, 2, "T^2 + T + 1"),
        (TowerKind::F, 3, "T - 1"),
    ] {
        let t = tower(kind, q, l);
        let (_, set) = t.splitting_set().unwrap();
        for &a in set.iter().take(3) {
            let fiber = t.fiber_enumerate(a, 3).unwrap();
            let got: Vec<Vec<FieldElem>> = fiber.chains.into_iter().map(|c| c.elements).collect();
            assert_eq!(got, naive_chains(&t, a, 3), "{kind} q={q} L={l}");
        }
    }
}

#[test]
fn splitting_certification() {
    let cases = [
        (2u64, "T + 1", 6usize),
        (2, "T^2 + T + 1", 6),
        (3, "T - 1", 4),
    ];
    for (q, l, depth) in cases {
        let prime = Prime::parse(&base_field(q).unwrap(), l).unwrap();
        for kind in [TowerKind::E, TowerKind::F] {
            let t = tower(kind, q, l);
            let (rule, set) = t.splitting_set().unwrap();
            if kind == TowerKind::E {
                assert_eq!(set.len() as u64, q * prime.m_d(), "{l}");
            } else {
                assert_eq!(rule, "deuring-F");
                assert_eq!(set.len() as u64, q * (q - 1) * prime.m_d(), "{l}");
            }
            for n in 1..=depth {
                let c = t.certify_splitting(&set, n).unwrap();
                assert!(c.certified(), "{kind} q={q} L={l} n={n}");
                assert_eq!(c.n_lb, set.len() as u128 * (q as u128).pow(n as u32));
            }
        }
    }
}

#[test]
fn point_counts() {
    let n_lb = |kind, q, l, n| dv_reports(&tower(kind, q, l), &[n]).unwrap()[0].n_lb;
    assert_eq!(n_lb(TowerKind::E, 2, "T + 1", 6), 128);
    assert_eq!(n_lb(TowerKind::E, 2, "T^2 + T + 1", 4), 96);
    assert_eq!(n_lb(TowerKind::F, 3, "T - 1", 3), 162);
    assert_eq!(n_lb(TowerKind::E, 2, "T^2 + T + 1", 6), 384);
    let r = &dv_reports(&tower(TowerKind::F, 2, "T - 1"), &[9]).unwrap()[0];
    assert_eq!((r.n_lb, r.genus.as_deref()), (1024, Some("961")));
}

#[test]
fn ratios_at_level_ten() {
    let cases = [
        (TowerKind::E, 2, "T + 1", 2048u128, "1900", 1.0),
        (TowerKind::E, 2, "T^2 + T + 1", 6144, "1900", 3.0),
        (TowerKind::F, 2, "T + 1", 2048, "1953", 1.0),
        (TowerKind::F, 3, "T - 1", 354294, "176176", 2.0),
    ];
    for (kind, q, l, n_lb, g, bound) in cases {
        let r = dv_reports(&tower(kind, q, l), &[10]).unwrap().remove(0);
        assert_eq!(r.n_lb, n_lb);
        assert_eq!(r.genus.as_deref(), Some(g));
        assert_eq!(r.dv_bound, bound);
        let ratio = r.ratio.unwrap();
        assert!(
            ratio >= 0.8 * bound && ratio <= 1.25 * bound,
            "{kind} {l}: {ratio}"
        );
    }
}

#[test]
fn low_e_levels_are_flagged() {
    let reports = dv_reports(&tower(TowerKind::E, 2, "T + 1"), &[1, 2, 3]).unwrap();
    assert_eq!(reports[1].genus.as_deref(), Some("-5"));
    assert!(reports[0].ratio.is_none() && reports[1].ratio.is_none());
    assert!(reports[0].genus_anomaly.is_some() && reports[1].genus_anomaly.is_some());
    assert_eq!(reports[2].ratio, Some(8.0));
    assert!(genus_e(3, 4).anomaly.unwrap().contains("non-integral"));
}

#[test]
fn gamma_one_matches_f_at_t_minus_one() {
    for q in [2, 3] {
        let g = make_tower(TowerKind::Gamma, q, None, Some("1"), None, None).unwrap();
        let f = tower(TowerKind::F, q, "T - 1");
        let (rg, rf) = (
            dv_reports(&g, &[1, 2, 3]).unwrap(),
            dv_reports(&f, &[1, 2, 3]).unwrap(),
        );
        for (a, b) in rg.iter().zip(&rf) {
            assert_eq!(
                (a.n_lb, a.split_size, &a.genus, a.complete),
                (b.n_lb, b.split_size, &b.genus, b.complete)
            );
        }
    }
}

#[test]
fn genus_and_growth_bound() {
    for q in 2..=5u64 {
        for n in 0..=20 {
            assert!(genus_bound_holds(n, q));
        }
    }
    assert_eq!(genus_f(9, 2), 961);
    assert_eq!(genus_e(5, 2).value, 40.into());
}

#[test]
fn report_serialization() {
    let reports = dv_reports(&tower(TowerKind::F, 2, "T + 1"), &[1, 2]).unwrap();
    let json = serde_json::to_value(&reports[0]).unwrap();
    for key in [
        "tower",
        "q",
        "L",
        "gamma",
        "field",
        "level",
        "split_size",
        "complete",
        "N_lb",
        "genus",
        "ratio",
        "dv_bound",
        "prop22_ok",
    ] {
        assert!(json.get(key).is_some(), "missing {key}");
    }
    assert_eq!(json["field"]["modulus"], serde_json::json!([1, 1, 1]));
    let csv = reports_to_csv(&reports).unwrap();
    let mut lines = csv.lines();
    assert!(lines
        .next()
        .unwrap()
        .starts_with("tower,q,L,gamma,field_p,field_k,field_modulus,level"));
    assert_eq!(lines.count(), 2);
}

#[test]
fn example_towers() {
    let base = base_field(2).unwrap();
    let p = Prime::parse(&base, "T^2 + T + 1").unwrap();
    let t = TowerSpec::example("T^2 + T", &p).unwrap();
    assert_eq!(t.degree(), 4);
    let r = dv_reports(&t, &[1, 2]).unwrap();
    assert!(r.iter().all(|x| x.genus.is_none() && x.ratio.is_none()));
    let l = Prime::parse(&base, "T").unwrap();
    assert!(TowerSpec::example("T^2 + T", &l).is_err());
    let l = Prime::parse(&base, "T + 1").unwrap();
    assert!(TowerSpec::example("T^2 + T", &l).is_err());
}
