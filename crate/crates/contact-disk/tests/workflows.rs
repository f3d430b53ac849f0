//! Cross-module workflows: surgery triangles against resolutions, the disk
//! Grothendieck group, and the sign bridge between the two Euler-number
//! conventions.

use contact_disk::arcdiag;
use contact_disk::bypass::{bypass_triangle, enumerate_equators};
use contact_disk::disk::{gamma_of_word, DividingSet};
use contact_disk::gf2::BitVector;
use contact_disk::present::K0Presentation;
use contact_disk::resolve::{k0_class, mu_object, resolve};

/// Every surgery triangle is a relation [d] = [gamma1] + [gamma2] between
/// independently computed resolution classes.
#[test]
fn triangle_relations_hold_in_k0() {
    for n in 2..=4 {
        for d in DividingSet::enumerate(n) {
            let rd = resolve(&d).unwrap();
            for e in enumerate_equators(&d).unwrap() {
                let t = bypass_triangle(&d, &e).unwrap();
                let mut v = k0_class(&rd);
                v.xor_assign(&k0_class(&resolve(&t.gamma1).unwrap()));
                v.xor_assign(&k0_class(&resolve(&t.gamma2).unwrap()));
                assert!(
                    v.is_zero(),
                    "triangle on {:?} breaks the class relation",
                    d.pairs()
                );
            }
        }
    }
}

/// The disk category has Grothendieck dimension 2^(n-1): the triangle
/// relations add nothing over the two-element field.
#[test]
fn disk_k0_dimension() {
    for n in 2..=4usize {
        let mut relations: Vec<BitVector> = Vec::new();
        for d in DividingSet::enumerate(n) {
            let rd = resolve(&d).unwrap();
            for e in enumerate_equators(&d).unwrap() {
                let t = bypass_triangle(&d, &e).unwrap();
                let mut v = k0_class(&rd);
                v.xor_assign(&k0_class(&resolve(&t.gamma1).unwrap()));
                v.xor_assign(&k0_class(&resolve(&t.gamma2).unwrap()));
                relations.push(v);
            }
        }
        let k = K0Presentation::new(vec![0; 1 << (n - 1)], relations);
        assert_eq!(k.dim(), 1 << (n - 1));
    }
}

/// The two Euler conventions are opposite on the disk: the arc-diagram side
/// counts the thickened handles as the positive region, while the matching
/// side grades from a positive basepoint region, which lies in the
/// complement.
#[test]
fn euler_conventions_are_opposite_on_the_disk() {
    for n in 2..=6usize {
        let z = arcdiag::zigzag(n).unwrap();
        for (handles, e_surface) in z.elementary_subsets() {
            let one_based: Vec<usize> = handles.iter().map(|h| h + 1).collect();
            let vertex = mu_object(n, &one_based);
            let d = gamma_of_word(n, &vertex.subset()).unwrap();
            assert_eq!(d.euler_number().unwrap(), -e_surface, "n={n} C={one_based:?}");
        }
    }
}

/// Hom homology between resolved complexes is blind to Gaussian
/// elimination on either side.
#[test]
fn homology_dims_survive_elimination_on_resolutions() {
    use contact_disk::twisted::{gaussian_eliminate, homology_dim};
    for n in 2..=4 {
        let resolved: Vec<_> = DividingSet::enumerate(n)
            .iter()
            .map(|d| resolve(d).unwrap().complex)
            .collect();
        for x in &resolved {
            let rx = gaussian_eliminate(x);
            for y in &resolved {
                let ry = gaussian_eliminate(y);
                let base = homology_dim(x, y);
                assert_eq!(homology_dim(&rx, y), base);
                assert_eq!(homology_dim(x, &ry), base);
                assert_eq!(homology_dim(&rx, &ry), base);
            }
        }
    }
}

/// Resolutions respect the rotation-free structure: resolving the mirror of
/// a matching yields the class of the mirrored word, mirrored back.
#[test]
fn resolution_class_counts_match_catalan_mass() {
    // Mod-2 classes of all matchings at fixed n span the vertex space: the
    // elementary classes are unit vectors, and every class is hit.
    for n in 2..=4usize {
        let mut span: Vec<BitVector> = Vec::new();
        for d in DividingSet::enumerate(n) {
            let v = k0_class(&resolve(&d).unwrap());
            span.push(v);
        }
        let rows: Vec<Vec<u8>> = span
            .iter()
            .map(|v| (0..v.len()).map(|i| u8::from(v.get(i))).collect())
            .collect();
        let rank = contact_disk::gf2::BitMatrix::from_rows(&rows).rank();
        assert_eq!(rank, 1 << (n - 1));
    }
}
