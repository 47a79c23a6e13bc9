//! Typed entities built from a parsed definition file.

use comod::coalgebra::{divided_power, grouplike, matrix_coalgebra, unit_coalgebra, Coalgebra};
use comod::comodule::{Bicomodule, Comodule, Side};
use comod::matrix::Matrix;
use comod::module::PresentedModule;
use comod::morita::MoritaContext;
use comod::ring::Ring;

use crate::format::{BicomoduleDef, Builtin, CoalgebraDef, ComoduleDef, Def, DefinitionFile, MapRef, MatrixLit};
use crate::CliError;

#[derive(Debug, Clone)]
#[allow(clippy::large_enum_variant)]
pub enum Entity<R: Ring> {
    Coalgebra(Coalgebra<R>),
    Comodule(Comodule<R>),
    Bicomodule(Bicomodule<R>),
    Map(Matrix<R>),
    Context(Box<MoritaContext<R>>),
}

impl<R: Ring> Entity<R> {
    pub fn kind(&self) -> &'static str {
        match self {
            Entity::Coalgebra(_) => "coalgebra",
            Entity::Comodule(_) => "comodule",
            Entity::Bicomodule(_) => "bicomodule",
            Entity::Map(_) => "map",
            Entity::Context(_) => "context",
        }
    }
}

#[derive(Debug, Clone)]
pub struct Model<R: Ring> {
    pub ring: R,
    pub entities: Vec<(String, Entity<R>)>,
}

fn sem(name: &str, msg: impl Into<String>) -> CliError {
    CliError::Semantic { name: name.to_string(), msg: msg.into() }
}

fn matrix<R: Ring>(ring: &R, m: &MatrixLit) -> Matrix<R> {
    // Entries were validated against the ring by the parser.
    let data = m.entries.iter().map(|e| ring.parse_elem(e).expect("canonical entry")).collect();
    Matrix::from_vec(ring, m.rows, m.cols, data)
}

fn carrier<R: Ring>(ring: &R, name: &str, gens: usize, rels: &Option<MatrixLit>) -> Result<PresentedModule<R>, CliError> {
    match rels {
        None => Ok(PresentedModule::free(ring, gens)),
        Some(r) if r.cols != gens => Err(sem(name, format!("relations have {} columns for {gens} generators", r.cols))),
        Some(r) => Ok(PresentedModule::new(ring, gens, &matrix(ring, r))),
    }
}

impl<R: Ring> Model<R> {
    pub fn build(ring: &R, file: &DefinitionFile, max_rank: usize) -> Result<Self, CliError> {
        let mut model = Model { ring: ring.clone(), entities: Vec::new() };
        for item in &file.items {
            let name = item.name.as_str();
            let lib = |e: comod::error::Error| sem(name, e.to_string());
            let entity = match &item.def {
                Def::Coalgebra(CoalgebraDef::Builtin(b)) => {
                    let c = match *b {
                        Builtin::Grouplike(d) => grouplike(ring, d),
                        Builtin::Matrix(n) => matrix_coalgebra(ring, n),
                        Builtin::Divided(k) => divided_power(ring, k),
                        Builtin::Unit => unit_coalgebra(ring),
                    };
                    Entity::Coalgebra(c.renamed(name))
                }
                Def::Coalgebra(CoalgebraDef::Literal { rank, delta, epsilon }) => {
                    if let Some(r) = rank {
                        if epsilon.cols != *r || delta.cols != *r || delta.rows != r * r {
                            return Err(sem(
                                name,
                                format!(
                                    "dimension mismatch: rank {r} needs delta {}x{r} and epsilon 1x{r}, got {}x{} and {}x{}",
                                    r * r,
                                    delta.rows,
                                    delta.cols,
                                    epsilon.rows,
                                    epsilon.cols
                                ),
                            ));
                        }
                    }
                    Entity::Coalgebra(Coalgebra::new(name, matrix(ring, delta), matrix(ring, epsilon)).map_err(lib)?)
                }
                Def::Comodule(ComoduleDef::Regular { side, coalgebra }) => {
                    Entity::Comodule(Comodule::regular(*side, model.coalgebra(coalgebra)?))
                }
                Def::Comodule(ComoduleDef::Sum(a, b)) => {
                    let (a, b) = (model.comodule(a)?, model.comodule(b)?);
                    Entity::Comodule(a.direct_sum(b).map_err(lib)?)
                }
                Def::Comodule(ComoduleDef::Literal { side, coalgebra, generators, relations, coaction }) => {
                    let c = model.coalgebra(coalgebra)?;
                    let m = carrier(ring, name, *generators, relations)?;
                    Entity::Comodule(Comodule::new(*side, c, &m, matrix(ring, coaction)).map_err(lib)?)
                }
                Def::Bicomodule(BicomoduleDef::Regular(c)) => Entity::Bicomodule(Bicomodule::regular(model.coalgebra(c)?)),
                Def::Bicomodule(BicomoduleDef::From(x)) => Entity::Bicomodule(model.comodule(x)?.to_bicomodule()),
                Def::Bicomodule(BicomoduleDef::Literal { left, right, generators, relations, left_coaction, right_coaction }) => {
                    let (l, r) = (model.coalgebra(left)?, model.coalgebra(right)?);
                    let m = carrier(ring, name, *generators, relations)?;
                    Entity::Bicomodule(
                        Bicomodule::new(l, r, &m, matrix(ring, left_coaction), matrix(ring, right_coaction)).map_err(lib)?,
                    )
                }
                Def::Map(m) => Entity::Map(matrix(ring, m)),
                Def::Context(ctx) => {
                    let resolve = |r: &MapRef| -> Result<Matrix<R>, CliError> {
                        match r {
                            MapRef::Inline(m) => Ok(matrix(ring, m)),
                            MapRef::Named(n) => match model.get(n)? {
                                Entity::Map(m) => Ok(m.clone()),
                                other => Err(sem(n, format!("is a {}, expected a map", other.kind()))),
                            },
                        }
                    };
                    let (f, g) = (resolve(&ctx.f)?, resolve(&ctx.g)?);
                    let k = MoritaContext::new(
                        model.coalgebra(&ctx.d)?,
                        model.coalgebra(&ctx.c)?,
                        model.bicomodule(&ctx.m)?,
                        model.bicomodule(&ctx.n)?,
                        &f,
                        &g,
                    )
                    .map_err(lib)?;
                    Entity::Context(Box::new(k))
                }
            };
            let size = match &entity {
                Entity::Coalgebra(c) => c.rank(),
                Entity::Comodule(m) => m.rank(),
                Entity::Bicomodule(b) => b.rank(),
                _ => 0,
            };
            if size > max_rank {
                return Err(CliError::Usage(format!("{name} has rank {size}, above the cap --max-rank {max_rank}")));
            }
            model.entities.push((name.to_string(), entity));
        }
        Ok(model)
    }

    pub fn get(&self, name: &str) -> Result<&Entity<R>, CliError> {
        self.entities
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, e)| e)
            .ok_or_else(|| sem(name, "is not defined (names must be defined before use)"))
    }

    pub fn coalgebra(&self, name: &str) -> Result<&Coalgebra<R>, CliError> {
        match self.get(name)? {
            Entity::Coalgebra(c) => Ok(c),
            other => Err(sem(name, format!("is a {}, expected a coalgebra", other.kind()))),
        }
    }

    pub fn comodule(&self, name: &str) -> Result<&Comodule<R>, CliError> {
        match self.get(name)? {
            Entity::Comodule(c) => Ok(c),
            other => Err(sem(name, format!("is a {}, expected a comodule", other.kind()))),
        }
    }

    pub fn bicomodule(&self, name: &str) -> Result<&Bicomodule<R>, CliError> {
        match self.get(name)? {
            Entity::Bicomodule(b) => Ok(b),
            other => Err(sem(name, format!("is a {}, expected a bicomodule", other.kind()))),
        }
    }

    pub fn context(&self, name: &str) -> Result<&MoritaContext<R>, CliError> {
        match self.get(name)? {
            Entity::Context(k) => Ok(k),
            other => Err(sem(name, format!("is a {}, expected a context", other.kind()))),
        }
    }

    /// A comodule on `side`: a comodule of that side, or that side of a bicomodule.
    pub fn sided(&self, name: &str, side: Side) -> Result<Comodule<R>, CliError> {
        match self.get(name)? {
            Entity::Comodule(c) if c.side() == side => Ok(c.clone()),
            Entity::Comodule(_) => Err(sem(name, format!("is not a {side} comodule"))),
            Entity::Bicomodule(b) => Ok(match side {
                Side::Left => b.as_left(),
                Side::Right => b.as_right(),
            }),
            other => Err(sem(name, format!("is a {}, expected a {side} comodule", other.kind()))),
        }
    }

    /// A bicomodule, or a one-sided comodule viewed over the unit coalgebra.
    pub fn as_bicomodule(&self, name: &str) -> Result<Bicomodule<R>, CliError> {
        match self.get(name)? {
            Entity::Bicomodule(b) => Ok(b.clone()),
            Entity::Comodule(c) => Ok(c.to_bicomodule()),
            other => Err(sem(name, format!("is a {}, expected a bicomodule", other.kind()))),
        }
    }

    pub fn names_of(&self, kind: &str) -> Vec<String> {
        self.entities.iter().filter(|(_, e)| e.kind() == kind).map(|(n, _)| n.clone()).collect()
    }
}
