package org.fixture;

import java.util.ArrayDeque;
import java.util.NoSuchElementException;

class Numbers {
  void read(String input) {
    try {
      int value = Integer.parseInt(input);
      processNumber(value);
    } catch (NumberFormatException ok) {
      // Non-numeric input is expected; continue normally
    }
  }

  void processNumber(int value) {}

  @Test
  void popFails() {
    ArrayDeque<String> emptyStack = new ArrayDeque<>();
    try {
      emptyStack.pop();
      fail();
    } catch (NoSuchElementException expected) {}
  }

  void fail() {}

  @interface Test {}
}
