mod common;

use grassmann::expr::eval_str;
use grassmann::fixtures::rng;
use grassmann::geom::{join, meet, point_bracket};
use grassmann::poly::{monomials, nullspace_fit};
use grassmann::{
    eval_numeric, eval_symbolic, parse, pretty_print, Environment, HomPoly, Line, Point, Scalar,
};
use proptest::prelude::*;

use common::K;

fn coord() -> impl Strategy<Value = i64> {
    -50i64..=50
}

fn point() -> impl Strategy<Value = Point> {
    (coord(), coord(), coord()).prop_filter_map("nonzero", |(a, b, c)| {
        let p = Point::new(a, b, c);
        (!p.is_zero()).then_some(p)
    })
}

fn line() -> impl Strategy<Value = Line> {
    point().prop_map(|p| p.dual())
}

fn cubic() -> impl Strategy<Value = HomPoly> {
    prop::collection::vec(-20i64..=20, 10).prop_map(|c| {
        let coeffs: Vec<Scalar> = c.into_iter().map(Scalar::from).collect();
        HomPoly::from_coefficients(3, &coeffs)
    })
}

proptest! {
    #[test]
    fn join_is_dual_to_meet(p in point(), q in point()) {
        prop_assert_eq!(join(&p, &q).dual(), meet(&p.dual(), &q.dual()));
    }

    #[test]
    fn join_and_meet_are_incident(p in point(), q in point(), l in line(), m in line()) {
        let pq = join(&p, &q);
        prop_assert!(pq.contains(&p) && pq.contains(&q));
        let lm = meet(&l, &m);
        prop_assert!(l.contains(&lm) && m.contains(&lm));
    }

    #[test]
    fn bracket_is_alternating(p in point(), q in point(), r in point()) {
        let b = point_bracket(&p, &q, &r);
        prop_assert_eq!(&point_bracket(&q, &r, &p), &b);
        prop_assert_eq!(&point_bracket(&r, &p, &q), &b);
        prop_assert_eq!(point_bracket(&q, &p, &r), -&b);
        prop_assert!(point_bracket(&p, &p, &r).is_zero());
        prop_assert!(point_bracket(&p, &q, &q).is_zero());
    }

    #[test]
    fn meet_of_joins_expands_in_brackets(a in point(), b in point(), c in point(), d in point()) {
        let lhs = meet(&join(&a, &b), &join(&c, &d));
        let rhs = c.combine(&point_bracket(&a, &b, &d), &d, &-point_bracket(&a, &b, &c));
        prop_assert_eq!(lhs.coords(), rhs.coords());
    }

    #[test]
    fn euler_identity(f in cubic(), p in point()) {
        let grad = f.gradient();
        let dot = (0..3).fold(Scalar::zero(), |acc, i| acc + &p.coords()[i] * &grad[i].evaluate(&p));
        prop_assert_eq!(dot, Scalar::from(3) * f.evaluate(&p));
    }

    #[test]
    fn symbolic_evaluation_commutes_with_substitution(seed in any::<u64>()) {
        let mut r = rng(seed);
        let kind = [K::P, K::L, K::S][(seed % 3) as usize];
        let text = common::typed_expression(&mut r, kind, 3);
        let parsed = parse(&text).unwrap();
        let env = common::environment(&mut r);
        let x = common::point(&mut r);
        let numeric = eval_numeric(&parsed.expr, &env.clone().with_x(x.clone())).unwrap();
        let symbolic = eval_symbolic(&parsed.expr, &env).unwrap().substitute(&x);
        prop_assert_eq!(numeric, symbolic, "{}", text);
    }

    #[test]
    fn parsing_round_trips(seed in any::<u64>()) {
        let text = common::fuzz_string(&mut rng(seed));
        let first = parse(&text).unwrap();
        prop_assert_eq!(&parse(&text).unwrap(), &first);
        let printed = pretty_print(&first);
        let second = parse(&printed).unwrap();
        prop_assert_eq!(&second, &first);
        prop_assert_eq!(pretty_print(&second), printed);
    }

    #[test]
    fn parser_never_panics(text in "[a-dxA-D_0-9(). =]{0,24}") {
        let _ = parse(&text);
    }

    #[test]
    fn scaling_operands_keeps_the_point(a in point(), b in point(), c in point(), d in point(), k in 1i64..=9) {
        let env = Environment::new().with("a", a.clone()).unwrap().with("b", b.clone()).unwrap()
            .with("c", c.clone()).unwrap().with("d", d.clone()).unwrap();
        let scaled = env.clone().with("a", a.scaled(&Scalar::from(-k))).unwrap();
        let one = eval_str("ab.cd", &env).unwrap();
        let two = eval_str("ab.cd", &scaled).unwrap();
        prop_assert_eq!(one.canonical(), two.canonical());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn nullspace_cubic_passes_through_its_points(seed in any::<u64>()) {
        let pts = grassmann::fixtures::random_general_position(&mut rng(seed), 9, 10);
        let f = nullspace_fit(&pts, 3).unwrap();
        prop_assert_eq!(f.coefficients().len(), monomials(3).len());
        for p in &pts {
            prop_assert!(f.evaluate(p).is_zero());
        }
    }
}
