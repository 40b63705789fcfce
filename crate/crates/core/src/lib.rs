//! Soap-film geometry toolkit: non-manifold triangle meshes with triple curves
//! and tetrahedral points, analytic catenoid families spanning coaxial circles,
//! discrete area minimization, and quantitative checks of Plateau's laws
//! (120-degree dihedrals, densities, flux balance, contact angles), complement
//! cell structures, reflection-symmetry sweeps, geodesic nets on the sphere,
//! and logarithmic end asymptotics.

pub mod catenoid;
pub mod cells;
pub mod ends;
pub mod error;
pub mod flow;
pub mod geonet;
pub mod mesh;
pub mod planes;
pub mod plot;
pub mod repro;
pub mod shapes;
pub mod verify;

pub use error::Error;

/// Convenience alias used across the crate.
pub type Result<T> = std::result::Result<T, Error>;
