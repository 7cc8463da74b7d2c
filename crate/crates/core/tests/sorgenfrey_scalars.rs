use num_rational::Ratio;
use num_traits::Signed;
use qtop_core::sorgenfrey::qball_line;
use qtop_core::{
    verify_theorem, IntervalSet, Rational64, SorgenfreyModel, UrysohnFunction, Verdict,
};

fn r(n: i64, d: i64) -> Rational64 {
    Ratio::new(n, d)
}

#[test]
fn small_rationals_agree_with_closed_form() {
    let model = SorgenfreyModel::<Rational64>::half_line();
    let eps = r(1, 2);
    let chain = model.chain(&eps, 8).unwrap();
    let f = UrysohnFunction::new(&model, chain, IntervalSet::point(r(0, 1)), 8).unwrap();
    for i in 0..=14 {
        let z = r(i, 7);
        let value: Rational64 = f.evaluate(&z).to_scalar();
        let closed = (z / eps).min(r(1, 1));
        assert!((value - closed).abs() <= r(1, 256), "z={z}");
    }
}

#[test]
fn small_rationals_pass_the_theorem_check() {
    let model = SorgenfreyModel::<Rational64>::half_line();
    let chain = model.chain(&r(1, 1), 5).unwrap();
    let report =
        verify_theorem(&model, &chain, &IntervalSet::half_open(r(0, 1), r(1, 3)), 5).unwrap();
    assert_eq!(report.verdict(), Verdict::Pass, "{report}");
}

#[test]
fn integer_balls_are_euclidean() {
    for x in -5i64..=5 {
        for eps in 1i64..=4 {
            assert_eq!(
                qball_line(&x, &eps).unwrap(),
                IntervalSet::open(x - eps, x + eps)
            );
        }
    }
}
