use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse {what} from {input:?}: {reason}")]
    Parse {
        what: &'static str,
        input: String,
        reason: String,
    },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("{value} is not {p}-integral")]
    NotPIntegral { value: String, p: u64 },

    #[error("modulus {p}^{e} does not fit in 64 bits")]
    ModulusTooLarge { p: u64, e: u32 },

    #[error("expression is not in the span of the basis; residual: {residual}")]
    NotInSpan { residual: String },
}

impl Error {
    pub(crate) fn parse(what: &'static str, input: &str, reason: impl Into<String>) -> Self {
        Error::Parse {
            what,
            input: input.to_string(),
            reason: reason.into(),
        }
    }
}
