use num_bigint::BigUint;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("valuation of zero is infinite")]
    ZeroValuation,
    #[error("{0} is not prime")]
    NotPrime(BigUint),
    #[error("parameter t = {0} is below -1; normalize it with reduce_param first")]
    ParamOutOfRange(i64),
    #[error("field elements belong to different fields (t = {0} and t = {1})")]
    MismatchedField(i64, i64),
    #[error("division by zero in the field")]
    DivisionByZero,
    #[error("factorization of {0} did not converge")]
    FactorizationFailed(BigUint),
    #[error("t = {0} is not field-monogenic; no power integral basis exists")]
    NotMonogenic(i64),
    /// The construction produced something the theory says cannot happen.
    #[error("internal consistency failure at t = {t}: {detail}")]
    Inconsistent { t: i64, detail: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
