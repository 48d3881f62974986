//! Sierpinski graphs S(n,m), Hamming graphs K_m^n, and the modular-linear
//! embeddings between them, with Tower of Hanoi solvers built on top.
//!
//! Vertices are fixed-length digit vectors over Z_m, most significant
//! (first) coordinate first. Graph construction, map tables and embedding
//! verification fan out across threads when the `parallel` feature is on;
//! every result is identical with it off.

pub mod codes;
pub mod embedding;
pub mod error;
pub mod export;
pub mod graph;
pub mod hanoi;
pub mod linear;
pub mod modular;
pub mod par;
pub mod symmetry;
pub mod verify;
pub mod vertex;

pub use codes::{eta, eta_inverse, gamma, gray_sequence, BitVertex};
pub use embedding::{
    embedding_matrix, embedding_table, epsilon_forward, epsilon_recursive, phi_forward, phi_inverse,
    phi_recursive, single_twist_forward, tau_forward, tau_inverse, EmbeddingKind, TwistFamily, VertexMap,
};
pub use error::{Error, Result};
pub use graph::{
    build_hamming, build_sierpinski, build_sierpinski_recursive, build_single_twist, corners, edge_density,
    is_sierpinski_edge, km_decomposition, Graph, GraphKind,
};
pub use hanoi::{
    classic_solution, constant_corner_search, diplomats_table, is_legal_move, path_length_to_zero,
    position_coordinate, shortest_path_to_zero, solve_from_position, wolfe_coordinate, Coordinates,
    HanoiPosition, MovePath,
};
pub use linear::{invert_linear_map, LinearMap};
pub use par::Execution;
pub use symmetry::{apply_symmetry, PermutationSymmetry};
pub use verify::{layout_metrics, verify_coordinatization, verify_embedding, EmbeddingReport, LayoutMetrics};
pub use vertex::{Dims, Vertex};
