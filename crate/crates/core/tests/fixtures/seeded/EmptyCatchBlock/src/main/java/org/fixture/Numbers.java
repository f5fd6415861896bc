package org.fixture;

class Numbers {
  void read(String input) {
    try {
      Integer.parseInt(input);
    } catch (NumberFormatException e) {
    }
    try {
      Integer.parseInt(input);
    } catch (RuntimeException expected) {}
  }
}
