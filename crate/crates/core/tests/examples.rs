use bdcover::bdinv::{finite_invariants, sharp_lattices, zind_lattice, BDDatum};
use bdcover::cover::{center, CoverSpec};
use bdcover::hecke::{automorphism_action, HeckeSpec};
use bdcover::localfield::{hilbert, LocalFieldSpec, SymbolConvention};
use bdcover::par::Exec;
use bdcover::reps::{build_irrep, genuine_characters, global_multiplicity_bound, GlobalBoundInput};
use bdcover::verify::{all_suites, Grid, VerifyConfig};
use bdcover::zlattice::{IntMatrix, Lattice};

#[test]
fn rank_one_quartic_invariants() {
    let d = BDDatum::split(IntMatrix::from_rows(&[vec![1]]), 4).unwrap();
    assert_eq!(sharp_lattices(&d).ysharp, Lattice::from_vectors(1, &[vec![2]]));
    assert_eq!(zind_lattice(&d).unwrap(), 2);
    let fi = finite_invariants(&d).unwrap();
    assert_eq!(fi.mu.factors(), &[2]);
    assert_eq!(fi.nu_hat.factors(), &[2]);
}

#[test]
fn uniformizer_symbol() {
    for conv in [SymbolConvention::Inverse, SymbolConvention::Standard] {
        let f = LocalFieldSpec::new(7, 2).unwrap().with_convention(conv);
        assert_eq!(hilbert(&f, &f.uniformizer(), &f.uniformizer()).exponent(), 1);
    }
}

#[test]
fn residue_path_needs_the_inverse_orientation() {
    let datum = BDDatum::split(IntMatrix::from_rows(&[vec![0]]), 3).unwrap();
    let inv = HeckeSpec::new(LocalFieldSpec::new(7, 3).unwrap(), datum.clone()).unwrap();
    let f = inv.field().clone();
    assert!(automorphism_action(&inv, &[1], &f.unit(1), &[1]).unwrap().agree());
    let std_field = LocalFieldSpec::new(7, 3).unwrap().with_convention(SymbolConvention::Standard);
    let st = HeckeSpec::new(std_field, datum).unwrap();
    assert!(!automorphism_action(&st, &[1], &f.unit(1), &[1]).unwrap().agree());
}

#[test]
fn irrep_dimensions_match_central_index() {
    for (q, n, c) in [(5u64, 4u64, vec![vec![1i64]]), (7, 3, vec![vec![1]]), (13, 3, vec![vec![1, 0], vec![0, 1]])] {
        let s = CoverSpec::new(
            LocalFieldSpec::new(q, n).unwrap(),
            BDDatum::split(IntMatrix::from_rows(&c), n).unwrap(),
        )
        .unwrap();
        let cd = center(&s).unwrap();
        let chi = genuine_characters(&s, &cd, 1).unwrap().remove(0);
        let pi = build_irrep(&s, &chi).unwrap();
        assert_eq!(pi.dimension() as u64, zind_lattice(s.datum()).unwrap());
    }
}

#[test]
fn multiplicity_bound_examples() {
    let split = GlobalBoundInput {
        is_split: true,
        ..Default::default()
    };
    assert_eq!(global_multiplicity_bound(&split).unwrap(), 1);
    let nonsplit = GlobalBoundInput {
        is_split: false,
        ker_sha: Some(2),
        sha_n: Some(4),
    };
    assert_eq!(global_multiplicity_bound(&nonsplit).unwrap(), 8);
}

#[test]
fn execution_strategies_agree() {
    let base = VerifyConfig {
        grid: Grid::Small,
        ..Default::default()
    };
    let seq = all_suites(&VerifyConfig {
        exec: Exec::Sequential,
        ..base
    });
    let par = all_suites(&VerifyConfig {
        exec: Exec::Parallel,
        ..base
    });
    assert_eq!(seq, par);
    assert!(seq.iter().all(|r| r.passed()), "{seq:#?}");
}
