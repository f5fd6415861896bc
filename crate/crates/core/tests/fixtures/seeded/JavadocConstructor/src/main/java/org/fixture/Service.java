package org.fixture;

class Service {
  public Service() {}

  public Service(int x) {}

  Service(String s) {}
}
