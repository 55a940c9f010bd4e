//! Hand-wired member graphs driving every branch of the coloring
//! construction, with the expected case path, palette and pivotal
//! vertices pinned.

mod common;

use chibound::coloring::{color, CaseLabel, Coloring};
use chibound::graph::Graph;
use chibound::oracle::exact_chromatic_number;
use chibound::partition::{build_two_level, max_clique_size, verify_partition_axioms};
use chibound::patterns::is_class_member;
use chibound::verify::{run_all_checks, LemmaId, LemmaStatus};
use common::*;

fn colored_member(g: &Graph, omega: usize) -> Coloring {
    let report = is_class_member(g);
    assert!(report.in_class, "fixture must be a member, got {:?}", report.violation);
    assert_eq!(max_clique_size(g), omega);
    let p = build_two_level(g).unwrap();
    assert!(verify_partition_axioms(g, &p).is_empty());
    let c = color(g).expect("member colors within the bound");
    assert!(c.palette_size <= omega + 1);
    // the bound is at most one above the optimum
    let chi = exact_chromatic_number(g).unwrap().value;
    assert!(c.palette_size >= chi && c.palette_size - chi <= 1);
    c
}

#[test]
fn tight_configuration_with_two_vertex_up() {
    let g = up2_instance();
    let c = colored_member(&g, 4);
    assert_eq!(c.trace.case_path, vec![CaseLabel::Case3_2_2Up2]);
    assert_eq!(c.palette_size, 5);
    assert_eq!(c.trace.t, Some(3));
    assert_eq!(c.trace.p, Some(0));
    assert_eq!(c.trace.z1, Some(8));
    assert_eq!(c.trace.z2, Some(9));
    assert_eq!(c.trace.y1, Some(4));
    // trace honesty: the recorded pivots satisfy the facts the case cites
    assert_eq!(g.neighbors_in(8, &[10usize, 11, 12, 13].into_iter().collect()).len(), 3);
    assert_eq!(g.neighbors_in(9, &[10usize, 11, 12, 13].into_iter().collect()).len(), 1);
    // y1 was recolored to ω+1
    assert_eq!(c.colors[4], 5);
}

#[test]
fn tight_configuration_with_three_vertex_up() {
    let g = up3_instance();
    let c = colored_member(&g, 4);
    assert_eq!(c.trace.case_path, vec![CaseLabel::Case3_2_2Up3]);
    assert_eq!(c.palette_size, 5);
    assert_eq!(c.trace.y1, Some(4));
    assert_eq!(c.colors[4], 5);
    assert_eq!(c.colors[9], 5);
}

#[test]
fn undominated_x2_vertex() {
    let g = case3211_instance();
    let c = colored_member(&g, 4);
    assert_eq!(c.trace.case_path, vec![CaseLabel::Case3_2_1_1]);
    assert_eq!(c.palette_size, 5);
    // the escaped vertex takes the part color p+1 = 1
    assert_eq!(c.colors[5], 1);
}

#[test]
fn undominated_z1() {
    let g = case3212_instance();
    let c = colored_member(&g, 4);
    assert_eq!(c.trace.case_path, vec![CaseLabel::Case3_2_1_2]);
    assert_eq!(c.palette_size, 5);
    // z1 reuses the part color
    assert_eq!(c.colors[8], 1);
}

#[test]
fn undominated_x3_vertex() {
    let g = subcase_a_instance();
    let c = colored_member(&g, 4);
    assert_eq!(c.trace.case_path, vec![CaseLabel::Case3_2EarlyOut]);
    assert!(c.trace.notes.iter().any(|n| n.contains("x3-not-dominated")));
    assert_eq!(c.palette_size, 5);
}

#[test]
fn x3_x2_edgeless() {
    let g = eo1_instance();
    let c = colored_member(&g, 4);
    assert_eq!(c.trace.case_path, vec![CaseLabel::Case3_2EarlyOut]);
    assert!(c.trace.notes.iter().any(|n| n == "x3-x2-edgeless"));
}

#[test]
fn x3_vertex_missing_a_side() {
    let g = eo2_instance();
    let c = colored_member(&g, 4);
    assert_eq!(c.trace.case_path, vec![CaseLabel::Case3_2EarlyOut]);
    assert!(c.trace.notes.iter().any(|n| n.contains("x3-vertex-with-empty-side=13")));
}

#[test]
fn empty_i_prime() {
    let g = eo3_instance();
    let c = colored_member(&g, 4);
    assert_eq!(c.trace.case_path, vec![CaseLabel::Case3_2EarlyOut]);
    assert!(c.trace.notes.iter().any(|n| n == "i-prime-empty"));
    // the v0 part pins color 1 on both sides of V2's pairing, so the
    // last independent pair lands on ω+1
    assert_eq!(c.palette_size, 5);
}

#[test]
fn several_i_prime_classes() {
    let g = case2_instance();
    let c = colored_member(&g, 4);
    assert_eq!(c.trace.case_path, vec![CaseLabel::Case2]);
    assert_eq!(c.palette_size, 4);
}

#[test]
fn small_v2_clique_number() {
    let g = case1_instance();
    let c = colored_member(&g, 4);
    assert_eq!(c.trace.case_path, vec![CaseLabel::Case1]);
    assert_eq!(c.palette_size, 4);
}

#[test]
fn tight_fixture_satisfies_ut_lemma() {
    // the up2 fixture is exactly the configuration the U'_t/U_p facts
    // describe; every item must be applicable and hold
    for g in [up2_instance(), up3_instance()] {
        let p = build_two_level(&g).unwrap();
        let reports = run_all_checks(&g, &p);
        for r in &reports {
            assert_ne!(
                r.status,
                LemmaStatus::Violated,
                "{} violated on tight fixture: {}",
                r.lemma.name(),
                r.detail
            );
        }
        for id in [LemmaId::UtI, LemmaId::UtII, LemmaId::UtIII, LemmaId::UtIV, LemmaId::UtV] {
            let r = reports.iter().find(|r| r.lemma == id).unwrap();
            assert_eq!(r.status, LemmaStatus::Holds, "{}: {}", id.name(), r.detail);
        }
    }
}

#[test]
fn ut_fault_injection_detects_enlarged_ut() {
    let g = up2_instance();
    let mut p = build_two_level(&g).unwrap();
    // enlarge U'_t by claiming Y3 belongs to I'_t
    let second = p.second.as_mut().unwrap();
    second.i_classes[3].insert(7);
    let reports = chibound::verify::check_ut_up_lemma(&g, &p);
    let item1 = reports.iter().find(|r| r.lemma == LemmaId::UtI).unwrap();
    assert_eq!(item1.status, LemmaStatus::Violated, "{}", item1.detail);
}

#[test]
fn v2_fault_injection_detects_p3_in_x3() {
    let g = up2_instance();
    let mut p = build_two_level(&g).unwrap();
    // claim z1 sits in X3: the X3 rows then hold an induced P3
    p.x3.insert(8);
    p.x2.remove(8);
    let reports = chibound::verify::check_v2_structure(&g, &p);
    let item2 = reports.iter().find(|r| r.lemma == LemmaId::V2II).unwrap();
    assert_eq!(item2.status, LemmaStatus::Violated, "{}", item2.detail);
    assert!(item2.counterexample.as_ref().unwrap().reverify(&g));
}
