package org.fixture;

class Base {
  void work() {}

  @Deprecated
  void legacy() {}
}
