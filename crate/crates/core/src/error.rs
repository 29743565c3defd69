use alloc::string::String;

/// Errors raised by the algebraic layer. Every variant describes a
/// mathematical failure; none of them is an IO or usage problem.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("order below precision floor: series is O(t^{0}) with no known terms")]
    IndeterminateOrder(usize),
    #[error("not a unit: series must have order 0")]
    NotAUnit,
    #[error("no rational {0}-th root of leading coefficient")]
    NoRationalRoot(u32),
    #[error("inner series has order 0")]
    InnerOrderZero,
    #[error("reversion needs a series of order 1, got order {0}")]
    RevertOrder(usize),
    #[error("reversion needs linear coefficient 1")]
    RevertLinearCoefficient,
    #[error("insufficient bound: no run of {multiplicity} consecutive values below {bound}")]
    InsufficientBound { multiplicity: usize, bound: usize },
    #[error("generators have gcd {0} > 1 up to precision")]
    GcdGreaterThanOne(usize),
    #[error("precision exhausted: remainder O(t^{0}) became indeterminate")]
    PrecisionExhausted(usize),
    #[error("input precision insufficient for requested D = {required} (available {available})")]
    InsufficientInputPrecision { required: usize, available: usize },
    #[error("insufficient precision: need working precision {required}, have {available}")]
    InsufficientPrecision { required: usize, available: usize },
    #[error("empty parametrization")]
    EmptyParametrization,
    #[error("generator {0} is a unit or zero")]
    UnitOrZeroGenerator(usize),
    #[error("generators not minimal: {0}")]
    GeneratorsNotMinimal(String),
    #[error("generators are not Herzog-Kunz generators: {0}")]
    NotHerzogKunz(String),
    #[error("hypotheses not satisfied: {0}")]
    HypothesesNotSatisfied(String),
    #[error("perturbation not inside R: generator {0}")]
    PerturbationNotInRing(usize),
    #[error("hypothesis conductor ⊆ m² fails (a_n = {a_n} >= c_R = {conductor}); use the torsion witness instead")]
    ConductorNotInMSquare { a_n: usize, conductor: usize },
    #[error("conductor extension check failed: {0}")]
    ExtensionMismatch(String),
    #[error("element is not in the subring: value {0} cannot be reached")]
    NotInSubring(usize),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
