pub mod arena;
pub mod graph;
pub mod solvers;
pub mod register;
pub mod generators;
pub mod automata;
