pub mod dl;
pub mod exec;
pub mod saturation;
pub mod tableau;
pub mod semgraph;
pub mod lexicon;
pub mod sentence;
pub mod pipeline;
