use std::collections::BTreeMap;

use equiloc_core::bundles::{ChernPolynomial, EquivariantBundle};
use equiloc_core::localize::{bott_residue, singular_chern_number};
use equiloc_core::symalg::rat;
use equiloc_core::{Character, ProjectiveSpaceAction};

fn ch(v: &[i64]) -> Character {
    Character::new(v.to_vec())
}

/// The cone over a conic: weights (1, -1, 0, a) with the vertex at the last
/// point, projected from the weight-0 point onto the plane (1, -1, a).
fn quadric_value(weights: &[Character], plane: &[Character]) -> equiloc_core::Rational {
    let rank = weights[0].rank();
    let q = ProjectiveSpaceAction::new(rank, weights.to_vec()).unwrap();
    let p2 = ProjectiveSpaceAction::new(rank, plane.to_vec()).unwrap();
    let ids = ["p0", "p1", "p3"];
    let map: BTreeMap<String, String> = [("p0", "p0"), ("p1", "p1"), ("p3", "p2")]
        .into_iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect();
    let tp2 = EquivariantBundle::tangent(&p2.fixed_points().unwrap());
    let tp3 = EquivariantBundle::tangent(&q.fixed_points().unwrap());
    let bundles = [
        EquivariantBundle::pullback(ids, &map, &tp2).unwrap(),
        tp3.restrict_to(ids).unwrap(),
    ];
    let gamma = q.hypersurface_class(&[(2, Character::zero(rank))]).unwrap();
    let alpha = ChernPolynomial::monomial(&[(0, 1), (1, 1)]);
    singular_chern_number(&q, &gamma, &[3, 0, 1], &bundles, &alpha, 2).unwrap()
}

#[test]
fn singular_quadric_symbolic_and_specialized() {
    let w = [ch(&[1, 0]), ch(&[-1, 0]), ch(&[0, 0]), ch(&[0, 1])];
    let plane = [ch(&[1, 0]), ch(&[-1, 0]), ch(&[0, 1])];
    assert_eq!(quadric_value(&w, &plane), rat(24));
    for a in [2, 3, 5, -2, 7] {
        let w = [ch(&[1]), ch(&[-1]), ch(&[0]), ch(&[a])];
        let plane = [ch(&[1]), ch(&[-1]), ch(&[a])];
        assert_eq!(quadric_value(&w, &plane), rat(24), "a = {a}");
    }
}

/// Compares the singular recipe against the smooth Bott formula on the
/// hypersurface's own fixed-point data.
fn hypersurface_agrees(action: &ProjectiveSpaceAction, d: u32, chi: &Character, on_x: &[usize]) {
    let x = action.hypersurface_fixed_locus(d, chi, on_x).unwrap();
    let ids: Vec<String> = x.ids().map(str::to_string).collect();
    let ambient_t = EquivariantBundle::tangent(&action.fixed_points().unwrap());
    let bundles = [
        EquivariantBundle::tangent(&x),
        ambient_t
            .restrict_to(ids.iter().map(String::as_str))
            .unwrap(),
    ];
    let gamma = action.hypersurface_class(&[(d, chi.clone())]).unwrap();
    let dim = x.dim();
    let mut polys = vec![ChernPolynomial::monomial(&vec![(0, 1); dim])];
    polys.push(ChernPolynomial::monomial(&vec![(1, 1); dim]));
    if dim == 2 {
        polys.push(ChernPolynomial::monomial(&[(0, 1), (1, 1)]));
        polys.push(ChernPolynomial::monomial(&[(0, 2)]));
    }
    for poly in polys {
        let smooth = bott_residue(&x, &bundles, &poly).unwrap();
        let singular = singular_chern_number(action, &gamma, on_x, &bundles, &poly, dim).unwrap();
        assert_eq!(smooth, singular);
    }
}

#[test]
fn conic_and_smooth_quadric() {
    let p2 = ProjectiveSpaceAction::from_vecs(1, &[&[1], &[-1], &[0]]).unwrap();
    hypersurface_agrees(&p2, 2, &ch(&[0]), &[0, 1]);
    let p3 = ProjectiveSpaceAction::from_vecs(1, &[&[0], &[1], &[4], &[5]]).unwrap();
    hypersurface_agrees(&p3, 2, &ch(&[5]), &[0, 1, 2, 3]);
}

#[test]
fn known_chern_numbers() {
    // conic ≅ P^1: deg c_1 = 2; smooth quadric surface: c_1^2 = 8, c_2 = 4
    let p2 = ProjectiveSpaceAction::from_vecs(1, &[&[1], &[-1], &[0]]).unwrap();
    let conic = p2.hypersurface_fixed_locus(2, &ch(&[0]), &[0, 1]).unwrap();
    let t = [EquivariantBundle::tangent(&conic)];
    assert_eq!(
        bott_residue(&conic, &t, &ChernPolynomial::monomial(&[(0, 1)])).unwrap(),
        rat(2)
    );
    let p3 = ProjectiveSpaceAction::from_vecs(1, &[&[0], &[1], &[4], &[5]]).unwrap();
    let q = p3
        .hypersurface_fixed_locus(2, &ch(&[5]), &[0, 1, 2, 3])
        .unwrap();
    let t = [EquivariantBundle::tangent(&q)];
    assert_eq!(
        bott_residue(&q, &t, &ChernPolynomial::monomial(&[(0, 1), (0, 1)])).unwrap(),
        rat(8)
    );
    assert_eq!(
        bott_residue(&q, &t, &ChernPolynomial::monomial(&[(0, 2)])).unwrap(),
        rat(4)
    );
}
