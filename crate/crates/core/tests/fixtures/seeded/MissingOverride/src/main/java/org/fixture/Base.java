package org.fixture;

class Base {
  void work() {}
}
