#![allow(dead_code)]

use proptest::prelude::*;
use simplex_color::{generate, Complex, GeneratorKind, GeneratorSpec};

/// Valid (geometric) generator specs of moderate size.
pub fn spec() -> impl Strategy<Value = GeneratorSpec> {
    let seed = 0u64..1000;
    prop_oneof![
        (1usize..=5).prop_flat_map(|d| (Just(d), 1..=d + 1)).prop_map(|(d, k)| (GeneratorKind::Fan, d, k)),
        (3usize..=40).prop_map(|n| (GeneratorKind::ClosedFan, 2, n)),
        (1usize..=8).prop_map(|m| (GeneratorKind::TriTiling, 2, m)),
        (3usize..=60).prop_map(|n| (GeneratorKind::Delaunay2d, 2, n)),
        (1usize..=6).prop_map(|m| (GeneratorKind::Freudenthal, 2, m)),
        (1usize..=2).prop_map(|m| (GeneratorKind::Freudenthal, 3, m)),
        Just((GeneratorKind::Freudenthal, 4, 1)),
        (1usize..=5, 1usize..=40).prop_map(|(d, n)| (GeneratorKind::Path, d, n)),
    ]
    .prop_flat_map(move |t| (Just(t), seed.clone()))
    .prop_map(|((kind, d, size), seed)| GeneratorSpec::new(kind, d, size).with_seed(seed))
}

pub fn build(spec: &GeneratorSpec) -> Complex {
    generate(spec).unwrap_or_else(|e| panic!("{spec:?}: {e}"))
}

/// Points as integer coordinate rows.
pub fn complex(d: usize, points: &[&[i64]], simplices: &[&[usize]]) -> Complex {
    Complex::new(
        d,
        points.iter().map(|p| simplex_color::Point::from_ints(p)).collect(),
        simplices.iter().map(|s| s.to_vec()).collect(),
    )
    .unwrap()
}
