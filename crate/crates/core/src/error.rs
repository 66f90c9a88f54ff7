use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The arguments lie outside the mathematical domain of the operation.
    #[error("{0}")]
    Domain(String),
    /// A configured cap (field size, point budget, dimension) would be exceeded.
    #[error("{0}")]
    Resource(String),
    /// Malformed or inconsistent input data.
    #[error("{0}")]
    Input(String),
}

impl Error {
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Domain(_) => "domain",
            Error::Resource(_) => "resource",
            Error::Input(_) => "input",
        }
    }

    pub fn message(&self) -> String {
        self.to_string()
    }
}

pub type Result<T> = std::result::Result<T, Error>;

macro_rules! domain {
    ($($arg:tt)*) => { $crate::error::Error::Domain(format!($($arg)*)) };
}
macro_rules! resource {
    ($($arg:tt)*) => { $crate::error::Error::Resource(format!($($arg)*)) };
}
macro_rules! input {
    ($($arg:tt)*) => { $crate::error::Error::Input(format!($($arg)*)) };
}
pub(crate) use {domain, input, resource};
