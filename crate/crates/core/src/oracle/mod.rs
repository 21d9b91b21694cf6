//! Independent exact oracles: rational LP and finite-ambient hull geometry.

pub mod hull;
pub mod lp;

pub use hull::{
    brute_top_sum, distinct_permutations, hull_member_bruteforce, hull_vertices, orbit_points,
    permutahedron_vertices, polytope_vertices, weakstar_distance, weakstar_member_bruteforce,
    AmbientVector,
};
pub use lp::{fourier_motzkin_feasible, lp_feasible, Direction, LinearProgram, LpOutcome, Sense};
