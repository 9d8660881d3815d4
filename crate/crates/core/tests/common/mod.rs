pub mod bogoliubov;
