package org.fixture;

class Child extends Base {
  @Override
  void work() {}

  void legacy() {}

  void extra() {}

  @Override
  public String toString() {
    return "Child";
  }
}
