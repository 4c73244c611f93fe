namespace ssp4 {}
