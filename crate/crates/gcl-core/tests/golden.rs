//! Golden checks on the running six-object example: worked bound forms,
//! closure displays and intent membership spot checks.

use std::collections::BTreeSet;

use gcl_core::*;

const FIXTURE: &str =
    "B\n6\n5\n1\n2\n3\n4\n5\n6\na\nb\nc\nd\ne\nX.XXX\nX.X..\n.X..X\n.X..X\nX....\nXX..X\n";

fn fixture_gcl() -> Gcl {
    let ctx =
        FormalContext::parse(FIXTURE, ContextFormat::Burmeister, &ParseOptions::default()).unwrap();
    Gcl::build(ctx).unwrap()
}

#[test]
fn lower_bound_of_11011_factors_into_nine_clauses() {
    let gcl = fixture_gcl();
    let space = gcl.space();
    let product = space
        .parse_fn(
            "a*(~b + e)*(~d + e)*(~b + ~c)*(~b + ~d)*(c + ~d)*(b + c + ~e)*(b + d + ~e)*(~c + d + ~e)",
        )
        .unwrap();
    let eta = gcl.eta_of(&ExtentMask::parse("11011", 5).unwrap());
    assert_eq!(product, eta);
}

#[test]
fn bounds_of_the_one_six_node() {
    let gcl = fixture_gcl();
    let space = gcl.space();
    let mask = gcl.mask_of_objects(&["1", "6"]).unwrap();
    assert_eq!(mask.to_string(), "10001");

    // The lower bound factors through the shared literals a and e.
    let factored = space.parse_fn("a*e*(~b*c*d + b*~c*~d)").unwrap();
    assert_eq!(gcl.eta_of(&mask), factored);

    // The upper bound in maxterm form negates the three excluded classes,
    // and collapses to a five-term sum.
    let rho = gcl.rho_of(&mask);
    let cnf: BTreeSet<String> = space
        .to_cnf(&rho)
        .iter()
        .map(|c| c.display(space))
        .collect();
    let expected: BTreeSet<String> = [
        "~a + b + ~c + d + e",
        "a + ~b + c + d + ~e",
        "~a + b + c + d + e",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    assert_eq!(cnf, expected);
    let reduced = space.parse_fn("d + a*b + c*e + ~b*e + ~a*~e").unwrap();
    assert_eq!(rho, reduced);
}

#[test]
fn contextual_truth_expands_to_the_five_class_minterms() {
    let gcl = fixture_gcl();
    let space = gcl.space();
    let terms = space.to_dnf(gcl.one_eta());
    assert_eq!(terms.len(), 5);
    let rendered: BTreeSet<String> = terms.iter().map(|c| c.display(space)).collect();
    let expected: BTreeSet<String> = [
        "a*~b*c*d*e",
        "a*~b*c*~d*~e",
        "~a*b*~c*~d*e",
        "a*~b*~c*~d*~e",
        "a*b*~c*~d*e",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    assert_eq!(rendered, expected);
}

#[test]
fn closures_of_single_literals_match_their_displayed_forms() {
    let gcl = fixture_gcl();
    let space = gcl.space();
    let closed_a = closure(&gcl, &space.parse_fn("a").unwrap());
    assert_eq!(
        closed_a,
        space
            .parse_fn("a*~b*c*(d*e + ~d*~e) + a*~c*~d*(b*e + ~b*~e)")
            .unwrap()
    );
    let closed_not_e = closure(&gcl, &space.parse_fn("~e").unwrap());
    assert_eq!(
        closed_not_e,
        space.parse_fn("a*~b*c*~d*~e + a*~b*~c*~d*~e").unwrap()
    );
}

#[test]
fn closing_an_antecedent_trades_strictness_for_information() {
    let gcl = fixture_gcl();
    let space = gcl.space();
    let c = space.parse_fn("c").unwrap();
    // Against its own closure the rule is an equivalence carrying real
    // information; weakening the consequent by one literal leaves a strict
    // but still informative rule.
    let closed = allowable(&gcl, &c, &space.parse_fn("a*~b*c*(d*e + ~d*~e)").unwrap());
    assert_eq!(closed.t_class, Some(TClass::T1));
    assert_eq!(
        closed.informative,
        Some(InformativeClass::PurelyInformative)
    );
    let weakened = allowable(&gcl, &c, &space.parse_fn("a*~b*(d*e + ~d*~e)").unwrap());
    assert_eq!(weakened.t_class, Some(TClass::T2));
    assert_eq!(weakened.informative, Some(InformativeClass::Informative));
}

#[test]
fn intent_membership_spot_checks() {
    let gcl = fixture_gcl();
    let space = gcl.space();
    let member = |attr: &str, objects: &[&str]| {
        let mask = gcl.mask_of_objects(objects).unwrap();
        gcl.intent_member(&mask, &space.parse_fn(attr).unwrap())
            .unwrap()
    };
    assert!(member("a", &["1", "2", "5", "6"]));
    assert!(member("b", &["3", "4", "6"]));
    assert!(member("c", &["1", "2"]));
    assert!(member("d", &["1"]));
    assert!(member("e", &["1", "3", "4", "6"]));
    assert!(gcl
        .intent_member(&ExtentMask::empty(5), &space.zero())
        .unwrap());
    assert!(gcl
        .intent_member(&ExtentMask::full(5), &space.one())
        .unwrap());
    // Membership never crosses nodes.
    assert!(!member("a", &["1", "2"]));
    assert!(!member("d", &["1", "2"]));
}

#[test]
fn restricted_context_collapses_to_plain_truth() {
    let ctx =
        FormalContext::parse(FIXTURE, ContextFormat::Burmeister, &ParseOptions::default()).unwrap();
    let gcl = Gcl::build(restrict(&ctx, &["c", "e"]).unwrap()).unwrap();
    let space = gcl.space();
    assert_eq!(space.dnf_string(gcl.one_eta()), "~c*~e + c*~e + ~c*e + c*e");
    assert_eq!(
        space.cnf_string(gcl.zero_rho()),
        "(c + e)*(~c + e)*(c + ~e)*(~c + ~e)"
    );
    assert!(gcl.zero_rho().is_zero());
}
