use serde::Serialize;

/// Which identity a checker was verifying when it found a failure.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Law {
    Associativity,
    UnitLaw,
    Coassociativity,
    Counit,
    DeltaMultiplicative,
    DeltaUnit,
    CounitMultiplicative,
    CounitUnit,
    AntipodeLeft,
    AntipodeRight,
    GroupTable,
    DirectSum,
    GradedProduct,
    ModuleMultiplicative,
    ModuleUnit,
    ModuleAlgebraCompatibility,
    ModuleUnital,
    ComoduleCoassociativity,
    ComoduleCounit,
    ComoduleMultiplicative,
    ComoduleUnital,
    Automorphism,
    GroupHomomorphism,
}

/// A failed identity together with the basis indices at which it fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub law: Law,
    pub witness: Vec<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub failures: Vec<Failure>,
    /// Result of the optional unitality check, when it applies.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub unital: Option<bool>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn fail(&mut self, law: Law, witness: Vec<usize>) {
        self.failures.push(Failure { law, witness });
    }

    pub fn merge(&mut self, other: Report) {
        self.failures.extend(other.failures);
        if other.unital.is_some() {
            self.unital = other.unital;
        }
    }

    pub fn first(&self, law: Law) -> Option<&Failure> {
        self.failures.iter().find(|f| f.law == law)
    }
}
