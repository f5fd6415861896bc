package org.fixture;

class Account {
  private int size;

  void computeTotal() {}

  int getSize() {
    return size;
  }

  boolean isEmpty() {
    return size == 0;
  }

  static void main(String[] args) {}

  void parseHeaders() {}
}
