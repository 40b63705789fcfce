use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("empty input: {0}")]
    EmptyInput(&'static str),
    #[error("degenerate triangle {index} (area {area:.3e} below threshold)")]
    DegenerateTriangle { index: usize, area: f64 },
    #[error("vertex {0} has no incident triangles")]
    IsolatedVertex(usize),
    #[error("invalid vertex index {index} (mesh has {len} vertices)")]
    InvalidVertex { index: usize, len: usize },
    #[error("invalid boundary loop id {index} (mesh has {len} loops)")]
    InvalidLoop { index: usize, len: usize },
    #[error("mesh has no triple edges")]
    NoTripleEdges,
    #[error("no transverse contact curve on the given plane")]
    NoContactCurve,
    #[error("resolution too coarse: {0}")]
    ResolutionTooCoarse(String),
    #[error("sampling resolution too coarse: need n_theta >= {min_theta}, n_axial >= {min_axial}")]
    SamplingTooCoarse { min_theta: usize, min_axial: usize },
    #[error("area increased for {0} consecutive fixed steps")]
    DivergenceDetected(usize),
    #[error("triangle {0} collapsed during relaxation")]
    MeshCollapse(usize),
    #[error("relaxation step increased total length and backtracking failed")]
    StepTooLarge,
    #[error("mesh restricted to the annulus is not a graph over the fitted plane")]
    NotAGraphOverPlane,
    #[error("annulus too thin: r_out = {r_out} must exceed 2 r_in = {}", 2.0 * r_in)]
    AnnulusTooThin { r_in: f64, r_out: f64 },
    #[error("format error in {path} at {location}: {message}")]
    Format {
        path: String,
        location: String,
        message: String,
    },
    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub fn format(path: impl Into<String>, location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Format {
            path: path.into(),
            location: location.into(),
            message: message.into(),
        }
    }

    pub fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
