use repring::{base_change, class_count, StabilizerType};
use zlinalg::IntMatrix;

fn all_types(max_m: u32) -> Vec<StabilizerType> {
    let mut out = vec![
        StabilizerType::Trivial,
        StabilizerType::C2,
        StabilizerType::Delta222,
        StabilizerType::Delta233,
        StabilizerType::Delta234,
        StabilizerType::Delta235,
    ];
    out.extend((2..=max_m).map(StabilizerType::Dm));
    out.extend((3..=max_m).map(StabilizerType::Delta22m));
    out
}

fn to_matrix(rows: &[Vec<i64>]) -> IntMatrix {
    let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
    IntMatrix::from_rows(&refs)
}

#[test]
fn base_changes_are_unimodular_up_to_the_default_cap() {
    for t in all_types(repring::DEFAULT_MAX_M) {
        let b = base_change(&t).unwrap();
        let n = class_count(&t);
        assert_eq!(b.dim(), n, "{t}");
        assert!(b.matrix.iter().all(|r| r.len() == n), "{t}");
        let det = to_matrix(&b.matrix).det().unwrap();
        assert!(det == 1.into() || det == (-1).into(), "{t}: det {det}");
    }
}

#[test]
fn dihedral_base_change_for_m_two() {
    let b = base_change(&StabilizerType::Dm(2)).unwrap();
    assert_eq!(
        b.matrix,
        vec![
            vec![1, 1, 1, 1],
            vec![0, 1, 1, 0],
            vec![0, 0, 1, 0],
            vec![0, 1, 0, 1]
        ]
    );
    assert_eq!(
        b.labels(),
        ["chi1+chi2+chi3+chi4", "chi2+chi3", "chi3", "chi2+chi4"]
    );
}

#[test]
fn dihedral_base_change_for_odd_m() {
    let b = base_change(&StabilizerType::Dm(5)).unwrap();
    assert_eq!(
        b.matrix,
        vec![
            vec![1, 1, 2, 2],
            vec![0, 1, 1, 1],
            vec![0, 0, 1, 1],
            vec![0, 0, 0, 1]
        ]
    );
}

#[test]
fn first_basis_element_of_a_dihedral_group_is_the_regular_representation() {
    // Σχ + 2Σφ has degree 2m.
    for m in 2..=20u32 {
        let b = base_change(&StabilizerType::Dm(m)).unwrap();
        let table = repring::character_table(&StabilizerType::Dm(m)).unwrap();
        let degree: i64 = b.matrix[0]
            .iter()
            .zip(table.degrees())
            .map(|(c, d)| c * d)
            .sum();
        assert_eq!(degree, 2 * i64::from(m));
    }
}

#[test]
fn labels_render_signed_combinations() {
    let b = base_change(&StabilizerType::Delta233).unwrap();
    assert_eq!(
        b.labels(),
        [
            "xi1",
            "-xi1+xi2",
            "-xi1-xi2+xi3",
            "-xi1-xi3+xi4",
            "xi1-xi2-xi4+xi5"
        ]
    );
}
