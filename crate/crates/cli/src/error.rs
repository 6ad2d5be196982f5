use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read input: {0}")]
    Io(#[from] std::io::Error),
    #[error("malformed spec file: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("invalid spec: {0}")]
    Spec(String),
    #[error("{0}")]
    Core(circulant_core::Error),
    #[error("formula and oracle disagree: {0}")]
    Disagreement(String),
}

impl From<circulant_core::Error> for CliError {
    fn from(e: circulant_core::Error) -> Self {
        match e {
            circulant_core::Error::OracleDisagreement(what) => CliError::Disagreement(what.into()),
            other => CliError::Core(other),
        }
    }
}

impl CliError {
    /// 2 for formula/oracle disagreement, 1 for everything the user can fix.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Disagreement(_) => 2,
            _ => 1,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        let dis: CliError = circulant_core::Error::OracleDisagreement("x").into();
        assert_eq!(dis.exit_code(), 2);
        let user: CliError = circulant_core::Error::ZeroGenerators.into();
        assert_eq!(user.exit_code(), 1);
        assert_eq!(CliError::Spec("m".into()).exit_code(), 1);
    }
}
