//! JSON form of an endomorphism:
//! `{"n": 1, "param": "t" | {"l": 5}, "images_x": [...], "images_d": [...]}`.

use serde::{Deserialize, Serialize};

use super::Endomorphism;
use crate::error::AlgebraError;
use crate::exprio::{parse_weyl, print_weyl, Literals};
use crate::scalars::{CyclotomicField, QLaurent};
use crate::weyl::{RootAlgebra, SymbolicAlgebra, WeylAlgebra};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ParamSpec {
    /// Must be the string `"t"`.
    Symbolic(String),
    Root { l: u32 },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EndoDescriptor {
    pub n: usize,
    pub param: ParamSpec,
    pub images_x: Vec<String>,
    pub images_d: Vec<String>,
}

/// An endomorphism over the symbolic parameter or at a root of unity.
#[derive(Clone, Debug)]
pub enum AnyEndomorphism {
    Symbolic(Endomorphism<QLaurent>),
    Root(Endomorphism<CyclotomicField>),
}

fn build<R: Literals>(alg: &WeylAlgebra<R>, d: &EndoDescriptor) -> Result<Endomorphism<R>, AlgebraError> {
    let parse = |src: &String| {
        parse_weyl(src, alg).map_err(|e| AlgebraError::InvalidEndomorphism(format!("image {src:?}: {e}")))
    };
    let xs = d.images_x.iter().map(parse).collect::<Result<Vec<_>, _>>()?;
    let ds = d.images_d.iter().map(parse).collect::<Result<Vec<_>, _>>()?;
    Endomorphism::new(alg, xs, ds)
}

impl EndoDescriptor {
    /// Parses the images. The result is not yet validated.
    pub fn to_endomorphism(&self) -> Result<AnyEndomorphism, AlgebraError> {
        if self.n == 0 {
            return Err(AlgebraError::Unsupported("n must be at least 1".into()));
        }
        match &self.param {
            ParamSpec::Symbolic(s) if s == "t" => Ok(AnyEndomorphism::Symbolic(build(&SymbolicAlgebra::symbolic(self.n), self)?)),
            ParamSpec::Symbolic(s) => Err(AlgebraError::Unsupported(format!("unknown parameter {s:?}"))),
            ParamSpec::Root { l } => Ok(AnyEndomorphism::Root(build(&RootAlgebra::root_of_unity(self.n, *l)?, self)?)),
        }
    }

    pub fn from_symbolic(e: &Endomorphism<QLaurent>) -> Self {
        Self {
            n: e.algebra().n(),
            param: ParamSpec::Symbolic("t".into()),
            images_x: e.images_x().iter().map(print_weyl).collect(),
            images_d: e.images_d().iter().map(print_weyl).collect(),
        }
    }

    pub fn from_root(e: &Endomorphism<CyclotomicField>) -> Self {
        Self {
            n: e.algebra().n(),
            param: ParamSpec::Root { l: e.algebra().level() },
            images_x: e.images_x().iter().map(print_weyl).collect(),
            images_d: e.images_d().iter().map(print_weyl).collect(),
        }
    }
}
