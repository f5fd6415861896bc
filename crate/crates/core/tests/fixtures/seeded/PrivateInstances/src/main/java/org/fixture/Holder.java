package org.fixture;

class Holder {
  public int value;
  int shared;
  private int hidden;

  int read() {
    return hidden;
  }
}
