package org.fixture;

class Layout {
  static class Part {}

  private int size;

  static final int LIMIT = 1;

  Layout() {}

  int size() {
    return size;
  }

  static Layout create() {
    return new Layout();
  }
}
