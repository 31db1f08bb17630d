use thiserror::Error;

/// Process exit status: 0 verified, 1 mathematical mismatch, 2 usage or input error.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Outcome {
    Verified = 0,
    Mismatch = 1,
    InputError = 2,
}

impl Outcome {
    pub fn code(self) -> u8 {
        self as u8
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Core(#[from] ffc_core::Error),
    #[error("cannot write {path}: {source}")]
    Output {
        path: String,
        source: std::io::Error,
    },
}

/// Whether a core error means the input was malformed rather than that a
/// computation contradicted a claim.
pub fn is_input_error(e: &ffc_core::Error) -> bool {
    use ffc_core::Error::*;
    matches!(
        e,
        Parse(_)
            | UnsupportedCharacteristic(_)
            | DegreeOutOfRange(_)
            | NotStandardForm(_)
            | EvenCharacteristic
            | DimensionMismatch { .. }
            | MixedFields(..)
            | DegenerateMap
    )
}

impl CliError {
    pub fn outcome(&self) -> Outcome {
        match self {
            CliError::Core(e) if !is_input_error(e) => Outcome::Mismatch,
            _ => Outcome::InputError,
        }
    }
}
