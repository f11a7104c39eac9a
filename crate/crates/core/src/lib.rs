pub mod character;
pub mod cli;
pub mod diagram;
pub mod error;
pub mod operators;
pub mod oracle;
pub mod perm;
pub mod poly;
pub mod verify;
