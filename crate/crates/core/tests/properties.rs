use proptest::prelude::*;

use towerforge::drinfeld::{DrinfeldModule, SkewPoly};
use towerforge::fields::{base_field, Field, FieldElem};
use towerforge::polys::{MPoly, Monomial, RatFun, Residue, Var};
use towerforge::primes::Prime;

const SIZES: [u64; 9] = [2, 3, 4, 5, 8, 9, 16, 25, 27];

fn elem(k: &Field, i: u64) -> FieldElem {
    FieldElem::from_index(i % k.size())
}

type Terms = Vec<(u16, u16, u16, u64)>;

fn terms() -> impl Strategy<Value = Terms> {
    prop::collection::vec((0u16..4, 0u16..3, 0u16..3, any::<u64>()), 0..6)
}

fn poly(k: &Field, t: &Terms) -> MPoly {
    MPoly::from_terms(
        k,
        t.iter()
            .map(|&(a, b, c, i)| {
                let m = Monomial::ONE
                    .with_exp(Var::T, a)
                    .with_exp(Var::X, b)
                    .with_exp(Var::Y, c);
                (m, elem(k, i))
            })
            .collect::<Vec<_>>(),
    )
}

fn t_poly(k: &Field, coeffs: &[u64]) -> MPoly {
    MPoly::from_terms(
        k,
        coeffs
            .iter()
            .enumerate()
            .map(|(e, &i)| (Monomial::var(Var::T, e as u16), elem(k, i)))
            .collect::<Vec<_>>(),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(s in 0usize..SIZES.len(), a: u64, b: u64, c: u64) {
        let k = base_field(SIZES[s]).unwrap();
        let (a, b, c) = (elem(&k, a), elem(&k, b), elem(&k, c));
        prop_assert_eq!(k.mul(k.mul(a, b), c), k.mul(a, k.mul(b, c)));
        prop_assert_eq!(k.add(k.add(a, b), c), k.add(a, k.add(b, c)));
        prop_assert_eq!(k.mul(a, k.add(b, c)), k.add(k.mul(a, b), k.mul(a, c)));
        prop_assert_eq!(k.add(a, k.neg(a)), k.zero());
        if !a.is_zero() {
            prop_assert_eq!(k.mul(a, k.inv(a).unwrap()), k.one());
        }
        prop_assert_eq!(k.pow(a, k.size()), a);
    }

    #[test]
    fn polynomial_ring_axioms(s in 0usize..4, a in terms(), b in terms(), c in terms()) {
        let k = base_field(SIZES[s]).unwrap();
        let (a, b, c) = (poly(&k, &a), poly(&k, &b), poly(&k, &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn exact_divide_inverts_multiplication(s in 0usize..4, a in terms(), b in terms()) {
        let k = base_field(SIZES[s]).unwrap();
        let (a, b) = (poly(&k, &a), poly(&k, &b));
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).exact_divide(&b).unwrap(), Some(a));
    }

    #[test]
    fn printer_round_trips(s in 0usize..4, a in terms()) {
        let k = base_field(SIZES[s]).unwrap();
        let a = poly(&k, &a);
        prop_assert_eq!(MPoly::parse(&k, &a.to_string()).unwrap(), a);
    }

    #[test]
    fn substitution_is_a_homomorphism(s in 0usize..3, f in terms(), h in terms(), g in terms()) {
        let k = base_field(SIZES[s]).unwrap();
        let (f, h, g) = (poly(&k, &f), poly(&k, &h), poly(&k, &g));
        let bind = [(Var::X, RatFun::from(g.clone()))];
        let lhs = (&f * &h).substitute(&bind).unwrap();
        let rhs = f.substitute(&bind).unwrap().checked_mul(&h.substitute(&bind).unwrap()).unwrap();
        prop_assert!(lhs.equals(&rhs).unwrap());
        let sum = (&f + &h).substitute(&bind).unwrap();
        let parts = f.substitute(&bind).unwrap().checked_add(&h.substitute(&bind).unwrap()).unwrap();
        prop_assert!(sum.equals(&parts).unwrap());
    }

    #[test]
    fn substitution_composes(s in 0usize..3, f in terms(), g in terms(), c: u64, d: u64) {
        let k = base_field(SIZES[s]).unwrap();
        let (c, d) = (elem(&k, c), elem(&k, d));
        let f = poly(&k, &f);
        let g = poly(&k, &g).specialize(Var::X, k.one());
        let point = [(Var::T, c), (Var::Y, d)];
        let composed = f.substitute(&[(Var::X, RatFun::from(g.clone()))]).unwrap();
        let direct = composed.as_poly().unwrap().specialize(Var::T, c).specialize(Var::Y, d);
        let gv = g.eval(&point).unwrap();
        let stepwise = f.specialize(Var::X, gv).specialize(Var::T, c).specialize(Var::Y, d);
        prop_assert_eq!(direct, stepwise);
    }

    #[test]
    fn residue_is_a_homomorphism(l in 0usize..3, a in terms(), b in terms()) {
        let k = base_field(2).unwrap();
        let src = ["T + 1", "T^2 + T + 1", "T^3 + T + 1"][l];
        let lp = MPoly::parse(&k, src).unwrap();
        let r = Residue::new(&k, &lp, None).unwrap();
        let (a, b) = (poly(&k, &a), poly(&k, &b));
        prop_assert_eq!(r.reduce(&(&a * &b)).unwrap(), &r.reduce(&a).unwrap() * &r.reduce(&b).unwrap());
        prop_assert_eq!(r.reduce(&(&a + &b)).unwrap(), &r.reduce(&a).unwrap() + &r.reduce(&b).unwrap());
        prop_assert!(r.reduce(&lp).unwrap().is_zero());
    }

    #[test]
    fn skew_multiplication_associates(
        which in 0usize..2,
        a in prop::collection::vec(any::<u64>(), 0..4),
        b in prop::collection::vec(any::<u64>(), 0..4),
        c in prop::collection::vec(any::<u64>(), 0..4),
    ) {
        let (q, size) = [(2u64, 16u64), (3, 81)][which];
        let k = base_field(size).unwrap();
        let sp = |v: &[u64]| SkewPoly::new(&k, q, v.iter().map(|&i| elem(&k, i)).collect());
        let (a, b, c) = (sp(&a), sp(&b), sp(&c));
        let lhs = a.mul(&b).unwrap().mul(&c).unwrap();
        let rhs = a.mul(&b.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        let dist = a.mul(&b.add(&c).unwrap()).unwrap();
        prop_assert_eq!(dist, a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap());
    }

    #[test]
    fn drinfeld_image_is_a_homomorphism(
        u in 1u64..16,
        f in prop::collection::vec(any::<u64>(), 0..4),
        g in prop::collection::vec(any::<u64>(), 0..4),
    ) {
        let base = base_field(2).unwrap();
        let prime = Prime::parse(&base, "T^2 + T + 1").unwrap();
        let k = prime.quadratic().clone();
        let m = DrinfeldModule::new(&prime, &k, FieldElem::from_index(u)).unwrap();
        let (f, g) = (t_poly(&base, &f), t_poly(&base, &g));
        let prod = m.phi_image(&(&f * &g)).unwrap();
        prop_assert_eq!(prod, m.phi_image(&f).unwrap().mul(&m.phi_image(&g).unwrap()).unwrap());
        let sum = m.phi_image(&(&f + &g)).unwrap();
        prop_assert_eq!(sum, m.phi_image(&f).unwrap().add(&m.phi_image(&g).unwrap()).unwrap());
    }
}
