package org.fixture;

class Account {
  void Compute() {}

  int size() {
    return 0;
  }

  void quickly() {}

  void data_load() {}

  void computeTotal() {}
}
