package org.fixture;

class Person {
  private static final int maxItems = 3;
  private int Item_Count;

  void rename(String FirstName) {
    int My_var = FirstName.length();
    Item_Count = My_var + maxItems;
  }
}
