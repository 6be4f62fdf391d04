mod comodule;
mod grading;
mod hident;
mod modulealg;
