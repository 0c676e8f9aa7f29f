//! Shared reference data for the integration suites: the 4-variable
//! piecewise permutation family with its h-functions, the monomial
//! families on GF(2^3) and GF(2^4), and loader helpers.

#![allow(dead_code)]

use bentcat::boolfn::TruthTable;
use bentcat::gf2m::FieldContext;
use bentcat::perm::PointMap;
use bentcat::textio::parse_anf;

/// Coordinate rows of the base permutation of the piecewise family.
pub const PI1_COORDS: [&str; 4] = [
    "y1 + y2 + y1*y4 + y2*y4 + y3*y4",
    "y1 + y1*y2 + y3 + y2*y3 + y2*y4",
    "y1*y2 + y3 + y1*y3 + y2*y4 + y3*y4",
    "y1 + y3 + y1*y3 + y2*y3 + y4 + y1*y4 + y2*y4",
];

/// pi2 = pi1 + this affine offset (coordinate rows).
pub const OFFSET2_COORDS: [&str; 4] = [
    "y2 + y3 + y4",
    "1 + y2 + y3 + y4",
    "y1 + y3",
    "y1 + y3",
];

/// pi3 = pi1 + this affine offset.
pub const OFFSET3_COORDS: [&str; 4] = [
    "y1 + y4",
    "y1 + y2",
    "1 + y1 + y2",
    "1 + y1 + y4",
];

pub const H1: &str = "y1*y3*y4";
pub const H2: &str = "y2*y3 + y1*y4 + y2*y4 + y3*y4 + y1*y3*y4";
pub const H3: &str = "y1*y3 + y2*y3 + y3*y4 + y1*y3*y4";
pub const SHIFT: &str = "y1 + y2 + y4";

/// The eight 3-dimensional common vanishing subspaces of the family
/// that are not contained in the canonical half-space, in reduced
/// row-echelon form.
pub const EXTRA_SUBSPACE_BASES: [[u32; 3]; 8] = [
    [161, 6, 168],
    [241, 242, 12],
    [9, 162, 164],
    [9, 170, 172],
    [9, 6, 160],
    [249, 250, 12],
    [3, 244, 248],
    [3, 12, 240],
];

/// Row masks of the linear change of variables mapping the homogeneous
/// seeds onto the piecewise family's MM forms (row k = image of the
/// k-th unit vector, first coordinate in the least significant bit).
pub const HOM_MATRIX_ROWS: [u32; 8] = [169, 106, 204, 240, 8, 32, 64, 128];

pub fn anf_tt(text: &str, n: u32) -> TruthTable {
    parse_anf(text, Some(n)).expect("reference ANF parses").tt()
}

fn coords_map(coords: &[&str; 4]) -> PointMap {
    let tts: Vec<TruthTable> = coords.iter().map(|c| anf_tt(c, 4)).collect();
    PointMap::from_coordinates(&tts).expect("reference coordinates form a map")
}

/// The piecewise family: permutations (pi1..pi4), h-functions
/// (h1..h4 with h4 = h1+h2+h3+s) and the shift s.
pub struct PiecewiseFamily {
    pub pis: [PointMap; 4],
    pub hs: [TruthTable; 4],
    pub s: TruthTable,
}

pub fn piecewise_family() -> PiecewiseFamily {
    let pi1 = coords_map(&PI1_COORDS);
    let pi2 = pi1.add(&coords_map(&OFFSET2_COORDS)).unwrap();
    let pi3 = pi1.add(&coords_map(&OFFSET3_COORDS)).unwrap();
    let pi4 = pi1.add(&pi2).unwrap().add(&pi3).unwrap();
    let h1 = anf_tt(H1, 4);
    let h2 = anf_tt(H2, 4);
    let h3 = anf_tt(H3, 4);
    let s = anf_tt(SHIFT, 4);
    let h4 = &(&(&h1 ^ &h2) ^ &h3) ^ &s;
    PiecewiseFamily {
        pis: [pi1, pi2, pi3, pi4],
        hs: [h1, h2, h3, h4],
        s,
    }
}

/// Its four bent MM functions in dot form.
pub fn piecewise_functions() -> [TruthTable; 4] {
    let fam = piecewise_family();
    std::array::from_fn(|i| {
        bentcat::perm::mm_bent_dot(&fam.pis[i], &fam.hs[i]).expect("reference pieces are MM bent")
    })
}

/// GF(2^4) monomial family with d = 14: the involutive permutations for
/// alphas (a, a^2, a^4, a^8).
pub fn m4_monomial_triple(ctx: &FieldContext) -> [PointMap; 3] {
    let alphas = [ctx.generator_pow(1), ctx.generator_pow(2), ctx.generator_pow(4)];
    std::array::from_fn(|i| PointMap::monomial(ctx, alphas[i], 14).unwrap())
}

pub fn load_fixture(name: &str) -> String {
    let path = std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name);
    std::fs::read_to_string(path).expect("fixture file")
}
