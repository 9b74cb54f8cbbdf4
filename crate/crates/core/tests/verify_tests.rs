use std::collections::BTreeMap;

use nbcount::counting::term_eval;
use nbcount::graph::{emit_graph6, enumerate_up_to, named, Canonize};
use nbcount::polynom::{integer, RationalPoly};
use nbcount::symbolic::{expand_term, jexpr_eval, JExpr};
use nbcount::verify::*;

const P2_GOLDEN: &str = include_str!("../data/identity_p2.golden.json");

#[test]
fn catalog_named_examples() {
    let a = resolve_catalog(&TableData::builtin()).unwrap();
    assert_eq!(a.key(9), Some(named("C_4").unwrap().canonical_key()));
    assert_eq!(a.key(30), Some(named("K_5-(P_3∪K_2)").unwrap().canonical_key()));
    assert_eq!(a.key(15), Some(named("K_{1,4}+K_2").unwrap().canonical_key()));
    assert_eq!(a.key(28), Some(named("C_5+K_2").unwrap().canonical_key()));
    let matched: Vec<usize> =
        a.entries().filter(|(_, e)| e.provenance == Provenance::ResolvedByMatching).map(|(i, _)| i).collect();
    assert_eq!(matched, vec![14, 17, 18, 19, 21, 22, 26]);
    a.check_golden(CATALOG_GOLDEN).unwrap();
}

#[test]
fn catalog_covers_each_class_once() {
    let a = CatalogAssignment::builtin();
    let mut by_order = BTreeMap::new();
    for (_, e) in a.entries() {
        let g = e.key.graph();
        assert_eq!(g.isolated_count(), 0);
        *by_order.entry(g.n()).or_insert(0) += 1;
    }
    assert_eq!(by_order.into_iter().collect::<Vec<_>>(), vec![(2, 1), (3, 2), (4, 7), (5, 23)]);
    let distinct: std::collections::BTreeSet<_> = a.entries().map(|(_, e)| e.key).collect();
    assert_eq!(distinct.len(), 33);
}

#[test]
fn corrupted_table_fails_to_resolve() {
    let mut table = TableData::builtin();
    // move g_14's coefficient in one line onto g_17
    let line = table.lines.iter_mut().find(|l| l.coefficients.contains_key(&14)).unwrap();
    let c = line.coefficients.remove(&14).unwrap();
    let old = line.coefficients.remove(&17).unwrap_or_default();
    line.coefficients.insert(17, &old + &c);
    assert!(resolve_catalog(&table).is_err());
}

#[test]
fn corrupted_coefficient_is_reported() {
    let mut table = TableData::builtin();
    let a = CatalogAssignment::builtin();
    table.lines[4].coefficients.insert(3, RationalPoly::from_integer(4));
    let report = verify_table(&table, &a).unwrap();
    assert_eq!(report.passed(), 24);
    let bad = &report.lines[4];
    assert!(!bad.pass);
    assert_eq!(bad.discrepancies.len(), 1);
    assert_eq!(bad.discrepancies[0].term, "g_3");
    assert_eq!(bad.discrepancies[0].computed, "3");
}

#[test]
fn table_lines_all_pass() {
    let table = TableData::builtin();
    let report = verify_table(&table, &CatalogAssignment::builtin()).unwrap();
    assert!(report.all_pass(), "{}", report.to_text());
}

#[test]
fn edge_line_on_triangle() {
    // 16 Σ s(K_2,+) on K_3: 48 = 6 + 3·1·6 + 3·6 + 6
    let table = TableData::builtin();
    let line = &table.lines[4];
    let k3 = named("K_3").unwrap();
    let lhs = term_eval(&line.lhs, &k3) * integer(line.scale as i64);
    assert_eq!(lhs, integer(48));
    let rhs = CatalogAssignment::builtin().line_rhs(line).unwrap();
    assert_eq!(jexpr_eval(&rhs, &k3), integer(48));
}

#[test]
fn printed_lines_hold_on_small_hosts() {
    let table = TableData::builtin();
    let a = CatalogAssignment::builtin();
    let hosts = enumerate_up_to(6).unwrap();
    for line in &table.lines {
        let rhs = a.line_rhs(line).unwrap();
        for h in &hosts {
            let lhs = term_eval(&line.lhs, h) * integer(line.scale as i64);
            assert_eq!(lhs, jexpr_eval(&rhs, h), "line {} on {}", line.id, emit_graph6(h));
        }
    }
}

#[test]
fn identity_cancels() {
    assert!(verify_identity_symbolic(&IdentitySpec::builtin()).unwrap().is_zero());
}

#[test]
fn perturbed_identity_does_not_cancel() {
    let spec = IdentitySpec::builtin();
    for i in 0..spec.monomials.len() {
        let sum = verify_identity_symbolic(&spec.perturbed(i, &RationalPoly::one())).unwrap();
        assert!(!sum.is_zero(), "monomial {i}");
    }
}

#[test]
fn second_part_alone_matches_golden() {
    let sum = verify_identity_symbolic(&IdentitySpec::builtin().restricted(Part::P2)).unwrap();
    assert!(!sum.is_zero());
    let golden: JExpr = serde_json::from_str(P2_GOLDEN).unwrap();
    assert_eq!(sum, golden);
}

#[test]
fn identity_data_matches_hardcoded_evaluator() {
    // the numeric evaluator has its own copy of the polynomials
    let spec = IdentitySpec::builtin();
    for h in enumerate_up_to(5).unwrap() {
        let total = spec.terms().map(|t| term_eval(t, &h)).fold(integer(0), |a, b| a + b);
        assert_eq!(total, nbcount::counting::identity_lhs_eval(&h));
    }
}

#[test]
fn fitted_coefficients_match_every_line() {
    let table = TableData::builtin();
    for line in &table.lines {
        let fitted = fit_coefficients(&line.lhs, 6, 6).unwrap();
        assert_eq!(fitted, expand_term(&line.lhs).unwrap(), "line {}", line.id);
    }
}

#[test]
fn fitting_with_too_few_hosts_is_rank_deficient() {
    let t = "s(K_2,+)".parse().unwrap();
    let cfg = FitConfig {
        random_count: 0,
        ..FitConfig::new(2, 6)
    };
    assert!(matches!(fit_with(&t, &cfg), Err(nbcount::Error::LinearSystem(_))));
}

#[test]
fn numeric_sweep_finds_no_residual() {
    let mut hosts = exhaustive_hosts(6).unwrap();
    hosts.extend(random_hosts(5, 12, DEFAULT_SEED));
    let report = verify_identity_numeric(&hosts);
    assert_eq!(report.hosts, 1 + 2 + 4 + 11 + 34 + 156 + 5);
    assert!(report.pass());
}
