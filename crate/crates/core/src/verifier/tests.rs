use super::*;
use crate::exactalg::QtzPoly;

fn series(terms: &[(&str, &str)]) -> FrobeniusSeries<Rational> {
    let n = terms[0].0.parse::<Partition>().unwrap().size();
    let mut f = FrobeniusSeries::new(n);
    for (l, p) in terms {
        f.add(&l.parse().unwrap(), &p.parse().unwrap());
    }
    f
}

#[test]
fn compare_examples() {
    let a = series(&[("2", "1"), ("1,1", "q + t")]);
    assert!(compare_series(&a, &a).unwrap().is_empty());
    let b = series(&[("2", "1"), ("1,1", "q + 2*t")]);
    let d = diff_entries(&a, &b).unwrap();
    assert_eq!(d.len(), 1);
    assert_eq!(d[0].lambda.to_string(), "1,1");
    assert_eq!(d[0].difference, QtzPoly::from_i64(0) - QtzPoly::t());
    let c = series(&[("2", "1")]);
    let d = diff_entries(&a, &c).unwrap();
    assert_eq!(d.len(), 1);
    assert!(d[0].rhs.is_zero());
    assert!(matches!(
        compare_series(&a, &series(&[("1", "1")])),
        Err(VerifyError::MismatchedN(2, 1))
    ));
}

#[test]
fn small_cases_are_equal() {
    for n in 1..=3 {
        let r = verify_conjecture(n, &VerifyOptions::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Equal, "n={n}: {:?}", r.reasons);
        assert!(r.checks.iter().all(|c| c.passed), "{:?}", r.checks);
    }
}

#[test]
fn renderings() {
    let r1 = verify_conjecture(1, &VerifyOptions::default()).unwrap();
    let text = render_report(&r1, ReportFormat::Text);
    assert!(text.contains("EQUAL") && text.contains("s(1): 1"));
    let r2 = verify_conjecture(2, &VerifyOptions::default()).unwrap();
    let json = render_report(&r2, ReportFormat::Json);
    let back: VerificationReport = serde_json::from_str(&json).unwrap();
    assert_eq!(back.verdict, Verdict::Equal);
    assert_eq!(back.module, r2.module);
    assert_eq!(back, r2);
    assert_eq!(render_report(&r2, ReportFormat::Csv), "lambda,lhs,rhs,difference\n");
    let tex = render_report(&r2, ReportFormat::Latex);
    assert!(tex.contains("$(1,1)$ & $t + q + z$ & $t + q + z$"));
    assert!("yaml".parse::<ReportFormat>().is_err());
}

#[test]
fn exhausted_budget_is_inconclusive() {
    let opts = VerifyOptions {
        budget: Some(Duration::ZERO),
        ..VerifyOptions::default()
    };
    let r = verify_conjecture(2, &opts).unwrap();
    assert_eq!(r.verdict, Verdict::Inconclusive);
    assert_eq!(r.verdict.exit_code(), 2);
}

#[test]
fn tight_band_limit_is_inconclusive() {
    let opts = VerifyOptions {
        max_band: Some(1),
        ..VerifyOptions::default()
    };
    let r = verify_conjecture(3, &opts).unwrap();
    assert_eq!(r.verdict, Verdict::Inconclusive);
}
