use aplattice::complexes::{chain_counts, enumerate_chain_counts, order_complex};
use aplattice::homology::{boundary_matrix, reduced_homology};
use aplattice::lattice::{brute_force_covers, Lattice};
use aplattice::moebius::{mobius_interval, MoebiusMethod};
use aplattice::Progression;

#[test]
fn ids_form_a_linear_extension() {
    for n in 0..=10 {
        let l = Lattice::build(n).unwrap();
        for a in 0..l.len() {
            for b in 0..l.len() {
                if l.lt(a, b) {
                    assert!(a < b, "n = {n}");
                }
            }
        }
        assert_eq!(*l.element(l.bottom()), Progression::Empty);
        assert_eq!(*l.element(l.top()), Progression::interval(n));
    }
}

#[test]
fn lattice_operations_agree_with_progressions() {
    let l = Lattice::build(9).unwrap();
    for a in 0..l.len() {
        for b in 0..l.len() {
            assert_eq!(*l.element(l.meet(a, b)), l.element(a).meet(l.element(b)));
            assert_eq!(*l.element(l.join(a, b)), l.element(a).join(l.element(b)));
        }
    }
}

#[test]
fn covers_match_definition() {
    for n in 0..=10 {
        let l = Lattice::build(n).unwrap();
        let brute = brute_force_covers(&l);
        for (id, expected) in brute.iter().enumerate() {
            let mut down = l.covers_down(id).to_vec();
            down.sort_unstable();
            assert_eq!(&down, expected, "n = {n}, {}", l.element(id));
        }
    }
}

#[test]
fn chains_by_enumeration_and_recurrence() {
    for n in 1..=9 {
        let l = Lattice::build(n).unwrap();
        assert_eq!(&enumerate_chain_counts(&l).unwrap()[1..], chain_counts(n).unwrap().row(n));
    }
}

#[test]
fn interval_mobius_methods_agree() {
    let l = Lattice::build(8).unwrap();
    for lo in 0..l.len() {
        for hi in lo..l.len() {
            if !l.leq(lo, hi) {
                continue;
            }
            let def = mobius_interval(&l, lo, hi, MoebiusMethod::Definition).unwrap();
            let cut = mobius_interval(&l, lo, hi, MoebiusMethod::CoatomMeet).unwrap();
            assert_eq!(def, cut, "[{}, {}]", l.element(lo), l.element(hi));
        }
    }
}

#[test]
fn order_complex_boundaries_compose_to_zero() {
    let c = order_complex(&Lattice::build(7).unwrap()).unwrap();
    for d in 1..=c.dimension() {
        assert!(boundary_matrix(&c, d - 1).mul(&boundary_matrix(&c, d)).is_zero(), "d = {d}");
    }
}

#[test]
fn homology_euler_identity() {
    for n in 2..=8 {
        let c = order_complex(&Lattice::build(n).unwrap()).unwrap();
        let h = reduced_homology(&c).unwrap();
        let alternating: i64 = c
            .f_vector()
            .iter()
            .enumerate()
            .map(|(d, &f)| if d % 2 == 0 { f as i64 } else { -(f as i64) })
            .sum::<i64>()
            - 1;
        assert_eq!(h.euler_characteristic(), alternating, "n = {n}");
    }
}
