package org.fixture;

class Service {
  /** Coordinates the work of this component for every caller in the application. */
  public Service() {}

  private Service(int x) {}
}
